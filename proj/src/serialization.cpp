#include "miqf/serialization.hpp"

#include <cmath>

namespace miqf::io {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + why);
}

const json& get_field(const json& j, const std::string& field) {
  if (!j.is_object()) bad_field(field, "enclosing value is not an object");
  auto it = j.find(field);
  if (it == j.end()) bad_field(field, "missing");
  return *it;
}

long get_integer(const json& j, const std::string& field) {
  const json& v = get_field(j, field);
  if (!v.is_number_integer()) bad_field(field, "expected an integer");
  return v.get<long>();
}

double get_double(const json& j, const std::string& field) {
  if (!j.is_number()) bad_field(field, "expected a number");
  return j.get<double>();
}

}  // namespace

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "input is not valid JSON");
  return j;
}

json to_json(const Rational& x) { return x.str(); }

json to_json(const KElement& x) { return json{{"a", x.a.str()}, {"b", x.b.str()}}; }

json to_json(const KMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(json{{"im", m.at(i, j).imag()}, {"re", m.at(i, j).real()}});
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational rational_from_json(const json& j, const std::string& field) {
  if (!j.is_string()) bad_field(field, "expected a rational string like \"3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad_field(field, e.what());
  }
}

KElement kelement_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) bad_field(field, "expected an object with 'a' and 'b'");
  return {rational_from_json(get_field(j, "a"), field + ".a"),
          rational_from_json(get_field(j, "b"), field + ".b")};
}

KMatrix kmatrix_from_json(const json& j, const FieldContext& ctx, const std::string& field) {
  if (!j.is_array() || j.empty()) bad_field(field, "expected a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) bad_field(field + "[0]", "expected a non-empty row");
  const int cols = static_cast<int>(j[0].size());
  KMatrix m(rows, cols, ctx);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    std::string rf = field + "[" + std::to_string(i) + "]";
    if (!row.is_array()) bad_field(rf, "expected a row array");
    if (static_cast<int>(row.size()) != cols) bad_field(rf, "ragged row");
    for (int c = 0; c < cols; ++c) m.at(i, c) = kelement_from_json(row[c], rf + "[" + std::to_string(c) + "]");
  }
  return m;
}

CMatrix cmatrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) bad_field(field, "expected an array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) bad_field(field + "[0]", "expected a row array");
    cols = static_cast<int>(j[0].size());
  }
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    std::string rf = field + "[" + std::to_string(i) + "]";
    if (!row.is_array()) bad_field(rf, "expected a row array");
    if (static_cast<int>(row.size()) != cols) bad_field(rf, "ragged row");
    for (int c = 0; c < cols; ++c) {
      const json& cell = row[c];
      std::string cf = rf + "[" + std::to_string(c) + "]";
      if (!cell.is_object()) bad_field(cf, "expected an object with 're' and 'im'");
      double re = get_double(get_field(cell, "re"), cf + ".re");
      double im = get_double(get_field(cell, "im"), cf + ".im");
      if (!std::isfinite(re) || !std::isfinite(im)) bad_field(cf, "entry is not finite");
      m.at(i, c) = {re, im};
    }
  }
  return m;
}

json siegel_point_to_json(const SiegelPoint& p) {
  return json{{"m", p.m()}, {"n", p.n()}, {"z", to_json(p.z)}};
}

SiegelPoint siegel_point_from_json(const json& j) {
  long n = get_integer(j, "n");
  long m = get_integer(j, "m");
  CMatrix z = cmatrix_from_json(get_field(j, "z"), "z");
  if (n < 1 || m < 1) bad_field(n < 1 ? "n" : "m", "must be a positive integer");
  if (z.rows() != n || z.cols() != m)
    bad_field("z", "is " + std::to_string(z.rows()) + " x " + std::to_string(z.cols()) +
                       " but (n, m) declares " + std::to_string(n) + " x " + std::to_string(m));
  return SiegelPoint{std::move(z)};
}

json variety_file_to_json(const Variety& v) {
  return json{{"delta", v.ctx.delta()}, {"n", v.n}, {"r", v.r}, {"z", to_json(v.point.z)}};
}

VarietyFile variety_file_from_json(const json& j) {
  VarietyFile f;
  f.delta = get_integer(j, "delta");
  f.n = static_cast<int>(get_integer(j, "n"));
  f.r = static_cast<int>(get_integer(j, "r"));
  f.z = cmatrix_from_json(get_field(j, "z"), "z");
  if (f.n < 1 || f.r <= f.n) bad_field("n", "need 1 <= n < r");
  if (f.z.rows() != f.n || f.z.cols() != f.r - f.n)
    bad_field("z", "is " + std::to_string(f.z.rows()) + " x " + std::to_string(f.z.cols()) +
                       " but (n, r) declares " + std::to_string(f.n) + " x " + std::to_string(f.r - f.n));
  return f;
}

json triple_to_json(const Triple& t) {
  return json{{"alpha", to_json(t.alpha)},
              {"delta", t.ctx.delta()},
              {"gram", to_json(t.gram)},
              {"n", t.n},
              {"r", t.r}};
}

Triple triple_from_json(const json& j) {
  long delta = get_integer(j, "delta");
  int n = static_cast<int>(get_integer(j, "n"));
  int r = static_cast<int>(get_integer(j, "r"));
  FieldContext ctx = [&] {
    try {
      return FieldContext(delta);
    } catch (const Error& e) {
      bad_field("delta", e.what());
    }
  }();
  if (n < 1 || r <= n) bad_field("n", "need 1 <= n < r");
  KMatrix gram = kmatrix_from_json(get_field(j, "gram"), ctx, "gram");
  CMatrix alpha = cmatrix_from_json(get_field(j, "alpha"), "alpha");
  if (gram.rows() != r || gram.cols() != r)
    bad_field("gram", "must be " + std::to_string(r) + " x " + std::to_string(r));
  if (alpha.rows() != n || alpha.cols() != r)
    bad_field("alpha", "must be " + std::to_string(n) + " x " + std::to_string(r));
  return Triple{ctx, n, r, std::move(gram), std::move(alpha)};
}

json gu_file_to_json(const GuFile& g) {
  return json{{"delta", g.delta}, {"gamma", to_json(g.gamma)}, {"m", g.m}, {"n", g.n}};
}

GuFile gu_file_from_json(const json& j) {
  GuFile f;
  f.delta = get_integer(j, "delta");
  f.n = static_cast<int>(get_integer(j, "n"));
  f.m = static_cast<int>(get_integer(j, "m"));
  if (f.n < 1 || f.m < 1) bad_field(f.n < 1 ? "n" : "m", "must be a positive integer");
  FieldContext ctx = [&] {
    try {
      return FieldContext(f.delta);
    } catch (const Error& e) {
      bad_field("delta", e.what());
    }
  }();
  f.gamma = kmatrix_from_json(get_field(j, "gamma"), ctx, "gamma");
  if (f.gamma.rows() != f.n + f.m || f.gamma.cols() != f.n + f.m)
    bad_field("gamma", "must be " + std::to_string(f.n + f.m) + " x " + std::to_string(f.n + f.m));
  return f;
}

json report_to_json(const ValidationReport& rep) {
  json checks = json::array();
  for (const CheckEntry& c : rep.checks)
    checks.push_back(json{{"detail", c.detail}, {"name", c.name}, {"pass", c.pass}});
  return json{{"checks", std::move(checks)}, {"pass", rep.all_pass()}};
}

}  // namespace miqf::io
