#pragma once

#include <optional>

#include "rf3/classify.hpp"
#include "rf3/parallel.hpp"

namespace rf3 {

struct EquivWitness {
    Moebius psi, phi;  // g = psi o f o phi
};

/// Scans all of PGL(2,q) for phi with S(f o phi) = S(g) and recovers the
/// unique psi.  Returns the witness with the scan-least phi, or nothing.
std::optional<EquivWitness> brute_equiv(const FieldCtx& F, const RatFun& f, const RatFun& g,
                                        Exec mode = Exec::parallel);

/// If S(f_{s,t} o phi) = S(f_{s',t'}) for some parameters, those parameters.
std::optional<FstParams> fst_image(const FieldCtx& F, FstParams sp, const Moebius& phi);

/// The Class III points of Omega grouped into equivalence orbits.  Orbit
/// ids are dense and ordered by each orbit's scan-least member, so the
/// partition is independent of scan direction and thread count.
struct OrbitPartition {
    std::vector<FstParams> points;           // Class III Omega points, scan order
    std::vector<u32> orbit;                  // orbit id per point
    u32 orbit_count = 0;
    std::vector<std::vector<u32>> members;   // point indices per orbit, ascending

    std::optional<u32> find_point(FstParams sp) const;
};

OrbitPartition orbit_partition_fst(const FieldCtx& F, Exec mode = Exec::parallel,
                                   bool reverse_scan = false);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string note;  // falsifying witness, or informational detail
};

struct SuiteReport {
    std::string suite;
    std::string field;
    bool pass = false;
    std::vector<CheckResult> checks;
};

/// Named verification suites (counts, theorem2, s3table, eq-st,
/// invariant-constancy, theta-reduction, ramtable, identities, theta-sets,
/// evenchar, lambda-table).  Sampled checks draw from a generator seeded
/// with `seed`, so reports are reproducible.
SuiteReport verify_suite(const FieldCtx& F, const std::string& suite, u64 seed = 12345,
                         u32 samples = 200, Exec mode = Exec::parallel);

const std::vector<std::string>& suite_names();

}  // namespace rf3
