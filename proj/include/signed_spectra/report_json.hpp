#pragma once

#include "signed_spectra/balance.hpp"
#include "signed_spectra/bounds.hpp"
#include "signed_spectra/complexes.hpp"
#include "signed_spectra/frustration.hpp"
#include "signed_spectra/graph.hpp"
#include "signed_spectra/lifts.hpp"
#include "signed_spectra/spectra.hpp"

#include "json.hpp"

#include <string>

namespace signed_spectra {

using Json = nlohmann::ordered_json;

/// {"num": a, "den": b, "value": a/b}
Json rational_json(const Rational& r);
/// Reads {"num", "den"}; throws std::invalid_argument if malformed.
Rational rational_from_json(const nlohmann::json& j);

Json subset_json(const VertexSubset& s);
Json graph_summary_json(const SignedGraph& g);
Json balance_json(const BalanceCertificate& c);
Json isoperimetric_json(const IsoperimetricReport& r);
Json spectral_json(const SpectralReport& r);
Json chain_json(const BoundChainReport& r);
Json adjacency_json(const AdjacencyBounds& r);
Json spanning_tree_json(const SpanningTreeBound& r);
Json lift_assessment_json(const LiftAssessment& r);
Json lift_check_json(const LiftSpectrumCheck& r);
Json betti_json(const BettiNumber& b);
Json corollary_json(const CorollaryReport& r);
Json rayleigh_json(const RayleighPsiBound& r);
Json torus_example_json(const TorusRayleigh& r);

/// Indented `key: value` rendering. Rationals print as `a/b (decimal)`;
/// numbers print exactly as in the JSON form.
std::string render_text(const Json& j);

}  // namespace signed_spectra
