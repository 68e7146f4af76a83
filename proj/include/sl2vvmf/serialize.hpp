#pragma once

#include <json.hpp>

#include "sl2vvmf/bgg.hpp"
#include "sl2vvmf/generators.hpp"
#include "sl2vvmf/mtc.hpp"
#include "sl2vvmf/rep_analysis.hpp"

namespace sl2vvmf {

using json = nlohmann::json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);
void to_json(json& j, const QExpansion& q);
void from_json(const json& j, QExpansion& q);

void to_json(json& j, const VvmfVector& v);
void to_json(json& j, const MldeResult& m);
void to_json(json& j, const FixtureReport& r);
void to_json(json& j, const RepSignature& s);
void to_json(json& j, const AdmissibleSet& a);
void to_json(json& j, const CongruenceVerdict& v);
void to_json(json& j, const ZQCharacter& c);
void to_json(json& j, const GenModularPair& p);
void to_json(json& j, const AnalyticComparison& a);

json complex_json(const cplx& z);
json matrix_json(const Eigen::MatrixXcd& m);

}  // namespace sl2vvmf
