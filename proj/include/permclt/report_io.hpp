#pragma once

#include <json.hpp>
#include <string>

#include "permclt/clt_lab.hpp"
#include "permclt/exact.hpp"
#include "permclt/metrics.hpp"

namespace permclt {

/// Exact rationals travel as "p/q" strings ("8" when the denominator is 1).
std::string rational_string(const mpq_class& q);

nlohmann::json to_json(const ExactDistribution& dist);
/// {"n", "method", "cells": [{"r", "s", "count"}]}; counts as decimal strings.
nlohmann::json to_json(const BivariateDescentTable& table);
nlohmann::json to_json(const ExactMoments& m);
nlohmann::json to_json(const ViolationReport& report);
nlohmann::json to_json(const McReport& report);
nlohmann::json to_json(const InteractionReport& report);
nlohmann::json to_json(const BivariateReport& report);
nlohmann::json to_json(const CoincidenceReport& report);

/// "r,s,count" with one line per cell.
std::string table_csv(const BivariateDescentTable& table);
/// "pi,sigma,d_pi_id,d_id_sigma,d_pi_sigma".
std::string violations_csv(const ViolationReport& report);

}  // namespace permclt
