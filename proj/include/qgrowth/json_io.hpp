#ifndef QGROWTH_JSON_IO_HPP
#define QGROWTH_JSON_IO_HPP

#include <string>

#include "qgrowth/congruence.hpp"
#include "qgrowth/series.hpp"

namespace qgrowth {

/// {"grain", "offset", "prec", "ring": "Z" | {"mod": m}, "coeffs": [decimal strings]}
std::string series_to_json(const QSeries& s, int indent = -1);
QSeries series_from_json(const std::string& text);

/// {"claim": {...}, "verdict", "violations": [[n, "coeff"]], "checked_to"}
std::string report_to_json(const CongruenceReport& report, int indent = -1);

std::string claims_to_json(const std::vector<CongruenceClaim>& claims, int indent = -1);

} // namespace qgrowth

#endif
