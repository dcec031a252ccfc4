#pragma once

#include <json.hpp>

#include "ellrs/fusion.hpp"
#include "ellrs/verify.hpp"

namespace ellrs {

using Json = nlohmann::json;

Json to_json(const Partition& p);
Json to_json(Complex z);
Json to_json(const ModelParams& params);
Json to_json(const PolynomialInE& P);
/// Array of {"nu": [...], "value": x} in canonical key order.
Json to_json(const Expansion& e);
Json to_json(const SpectrumResult& s);
Json to_json(const FusionTable& t);
Json to_json(const SMatrix& s);
Json to_json(const OracleReport& r);

Partition partition_from_json(const Json& j);
Complex complex_from_json(const Json& j);

}  // namespace ellrs
