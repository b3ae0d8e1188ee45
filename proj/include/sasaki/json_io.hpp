#pragma once

#include <json.hpp>

#include "sasaki/brieskorn.hpp"
#include "sasaki/circle_bundle.hpp"
#include "sasaki/sasaki_join.hpp"
#include "sasaki/smale_barden.hpp"
#include "sasaki/sweep.hpp"
#include "sasaki/toric_surface.hpp"

// JSON encodings of the public types.  Keys are emitted in a fixed order so
// reports are byte-stable across runs and parallelism settings.

namespace sasaki {

using Json = nlohmann::ordered_json;

// Arbitrary-precision integers encode as JSON numbers when they fit in 64
// bits and as decimal strings otherwise; both forms are accepted on input.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const IntVec& v);
Json to_json(const IntMatrix& m);

// {"rank": k, "torsion": [[p, i, c], ...], "barden": int | "inf"}
Json to_json(const Manifold5& m);
Manifold5 manifold5_from_json(const Json& j);

Json to_json(const BardenName& n);

Json to_json(const SasakiDescriptor& d);
SasakiDescriptor descriptor_from_json(const Json& j);

Json to_json(const JoinResult& r);

Json to_json(const S3JoinReport& r);
Json to_json(const Census& c);

// {"rays": [[x, y], ...]}
Json to_json(const Fan2D& f);
Fan2D fan_from_json(const Json& j);

Json to_json(const AmpleCertificate& c);

Json to_json(const TotalSpaceReport& r);
Json to_json(const WangZillerReport& r);
Json to_json(const AbBasis& r);
Json to_json(const LermanCount& r);
Json to_json(const HirzebruchBundleReport& r);
Json to_json(const BlowupBundleReport& r);

Json to_json(const SweepResult<HirzebruchSweepRow>& r);
Json to_json(const SweepResult<WangZillerSweepRow>& r);
Json to_json(const SweepResult<BlowupSweepRow>& r);

Json error_to_json(const DomainError& e);

} // namespace sasaki
