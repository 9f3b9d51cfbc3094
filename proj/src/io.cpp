#include "hullcodes/io.hpp"

#include <sstream>

#include "hullcodes/error.hpp"

namespace hc {

json field_json(const FieldCtx& ctx) {
  return {{"p", ctx.p()}, {"m", ctx.m()}, {"poly", ctx.modulus()}};
}

FieldPtr field_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_field_spec(j.get<std::string>());
    const auto p = j.at("p").get<std::uint32_t>();
    const auto m = j.value("m", 1u);
    if (j.contains("poly")) return make_field(p, m, j.at("poly").get<std::vector<std::uint32_t>>());
    return make_field(p, m);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field: ") + e.what());
  }
}

json code_json(const LinearCode& c) {
  json alphabet = field_json(*c.alphabet().ctx);
  alphabet["s"] = c.alphabet().s;
  json rows = json::array();
  for (Eigen::Index r = 0; r < c.k(); ++r) {
    json row = json::array();
    for (Eigen::Index i = 0; i < c.n(); ++i) row.push_back(c.generator()(r, i));
    rows.push_back(std::move(row));
  }
  return {{"alphabet", alphabet}, {"n", c.n()}, {"k", c.k()}, {"generator", rows}};
}

LinearCode code_from_json(const json& j) {
  try {
    const auto ctx = field_from_json(j.at("alphabet"));
    const auto s = j.at("alphabet").value("s", 1u);
    const Alphabet a = subfield_alphabet(ctx, s);
    const auto n = j.at("n").get<std::size_t>();
    return from_rows(a, j.at("generator").get<std::vector<std::vector<std::uint32_t>>>(), n);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("code: ") + e.what());
  }
}

json weights_json(const WeightDistribution& w) {
  json out = json::array();
  for (const auto& [weight, count] : w) out.push_back({{"w", weight}, {"count", count}});
  return out;
}

json cwe_json(const CompleteWeightEnumerator& cwe) {
  json out = json::array();
  for (const auto& [comp, count] : cwe) out.push_back({{"composition", comp}, {"count", count}});
  return out;
}

json defining_set_json(const DefiningSet& d) {
  json elems = json::array();
  for (Elem e : d.elements) elems.push_back(d.ctx->coeffs(e));
  return {{"field", field_json(*d.ctx)},
          {"base_degree", d.base_degree},
          {"elements", elems},
          {"provenance", d.provenance}};
}

DefiningSet defining_set_from_json(const json& j, FieldPtr ctx) {
  try {
    if (j.contains("field")) ctx = field_from_json(j.at("field"));
    if (!ctx) throw Error(ErrorKind::ParseError, "defining set without a field");
    DefiningSet d{ctx, j.value("base_degree", 1u), {}, j.value("provenance", std::string("file")), {}};
    if (d.base_degree == 0 || ctx->m() % d.base_degree != 0) {
      throw Error(ErrorKind::NotASubfield, "base degree must divide m");
    }
    for (const auto& e : j.at("elements")) {
      if (e.is_number_integer()) {
        const auto v = e.get<std::int64_t>();
        if (v < 0 || static_cast<std::uint64_t>(v) >= ctx->size()) throw Error(ErrorKind::ParseError, "element index out of range");
        d.elements.push_back(Elem{static_cast<std::uint32_t>(v)});
        continue;
      }
      auto c = e.get<std::vector<std::uint32_t>>();
      if (c.size() > ctx->m()) throw Error(ErrorKind::ParseError, "too many coefficients");
      for (auto& x : c) x %= ctx->p();
      c.resize(ctx->m(), 0);
      d.elements.push_back(ctx->from_coeffs(c));
    }
    if (d.elements.empty()) throw Error(ErrorKind::EmptySet, "defining set is empty");
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("defining set: ") + e.what());
  }
}

json verdict_json(const MembershipVerdict& v) {
  return {{"variant", std::string(to_string(v.variant))},
          {"holds", v.holds},
          {"lhs", v.lhs.to_string()},
          {"rhs", v.rhs.to_string()},
          {"imaginary_zero", v.imaginary_zero}};
}

std::string weights_csv(const WeightDistribution& w) {
  std::ostringstream os;
  os << "w,count\n";
  for (const auto& [weight, count] : w) os << weight << ',' << count << '\n';
  return os.str();
}

std::string cwe_csv(const CompleteWeightEnumerator& cwe) {
  std::ostringstream os;
  os << "composition,count\n";
  for (const auto& [comp, count] : cwe) {
    for (std::size_t i = 0; i < comp.size(); ++i) os << (i ? ";" : "") << comp[i];
    os << ',' << count << '\n';
  }
  return os.str();
}

}  // namespace hc
