#pragma once

#include <json.hpp>

#include "catalog.hpp"
#include "filling.hpp"
#include "probes.hpp"

namespace fillprobe::report {

using nlohmann::json;

json rational(const Rational& q);
json group_info(const GroupPresentation& p, const RewritingSystem& rws, bool completion_required);
json catalog_listing();
json certificate(const FillingCertificate& cert, const TwoComplex& x, const GroupPresentation& p);
json fv_estimate(const FVEstimate& est, const GroupPresentation& p);
json growth_fit(const GrowthFit& fit);
json hyperbolicity(const HyperbolicityReport& r, const GroupPresentation& p);
json amenability(const AmenabilityProbe& probe);

}  // namespace fillprobe::report
