#pragma once

#include "widthlab/covering.hpp"
#include "widthlab/equations.hpp"
#include "widthlab/expanding.hpp"
#include "widthlab/rigid.hpp"
#include "widthlab/seqlab.hpp"
#include "widthlab/spectra.hpp"

#include <json.hpp>

#include <vector>

// JSON renderings of every verdict and report. Reals are written as decimal
// strings with 17 significant digits so output is byte-stable.
namespace widthlab::report {

using Json = nlohmann::ordered_json;

Json real(double v);
Json reals(const std::vector<double>& v);
Json matrix(const Matrix& m);

Json to_json(const spectra::SingularSpectrum& s);
Json to_json(const spectra::WidthSequence& w);
Json to_json(const seqlab::LacunarityVerdict& v);
Json to_json(const seqlab::MajorizationVerdict& v);
Json to_json(const seqlab::ShiftClassification& s);
Json to_json(const covering::CoverCertificate& c);
Json to_json(const covering::ClassificationVerdict& v);
Json to_json(const covering::DichotomyReport& r);
Json to_json(const covering::RangeEquivalence& r);
Json to_json(const covering::WeakFullness& w);
Json to_json(const equations::SolvabilityVerdict& v);
Json to_json(const equations::InvertibleMatch& m);
Json to_json(const expanding::ExpandVerdict& v);
Json to_json(const expanding::DualCheck& d);
Json to_json(const rigid::CoverSearchReport& r);

/// Parses {"n": .., "alphas": [..], "betas": [..]}; numbers may be JSON
/// numbers or decimal strings.
rigid::RigidCompactSpec rigid_spec_from_json(const Json& j);

}  // namespace widthlab::report
