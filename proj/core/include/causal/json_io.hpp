#ifndef CAUSAL_JSON_IO_HPP
#define CAUSAL_JSON_IO_HPP

#include <json.hpp>

#include "causal/pdo.hpp"
#include "causal/thermal.hpp"
#include "causal/tomography.hpp"

namespace causal {

// Matrix encoding shared with the CLI: {"rows", "cols", "entries": [[re, im], ...]}
// in row-major order.
nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json pseudo_state_to_json(const PseudoState& ps);

nlohmann::json estimate_to_json(const TomographyEstimate& est);

nlohmann::json thermal_to_json(const GibbsSpec& spec);

}  // namespace causal

#endif
