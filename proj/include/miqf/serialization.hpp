#pragma once

#include <string>

#include "json.hpp"
#include "miqf/correspondence.hpp"

namespace miqf::io {

using nlohmann::json;

/// Wraps nlohmann parsing so malformed text surfaces as ParseError.
json parse_text(const std::string& text);

json to_json(const Rational& x);
json to_json(const KElement& x);
json to_json(const KMatrix& m);
json to_json(const CMatrix& m);

Rational rational_from_json(const json& j, const std::string& field);
KElement kelement_from_json(const json& j, const std::string& field);
KMatrix kmatrix_from_json(const json& j, const FieldContext& ctx, const std::string& field);
CMatrix cmatrix_from_json(const json& j, const std::string& field);

json siegel_point_to_json(const SiegelPoint& p);
SiegelPoint siegel_point_from_json(const json& j);

struct VarietyFile {
  long delta = 0;
  int n = 0;
  int r = 0;
  CMatrix z{0, 0};
};

json variety_file_to_json(const Variety& v);
VarietyFile variety_file_from_json(const json& j);

json triple_to_json(const Triple& t);
Triple triple_from_json(const json& j);

struct GuFile {
  long delta = 0;
  int n = 0;
  int m = 0;
  KMatrix gamma{0, 0, FieldContext(1)};
};

json gu_file_to_json(const GuFile& g);
GuFile gu_file_from_json(const json& j);

json report_to_json(const ValidationReport& rep);

}  // namespace miqf::io
