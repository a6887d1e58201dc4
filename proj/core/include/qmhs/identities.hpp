#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qmhs/cyclotomic.hpp"
#include "qmhs/ids.hpp"
#include "qmhs/rational.hpp"

namespace qmhs {

// Outcome of checking one identity instance.  An identity registered as
// EXPECT_DISCREPANCY is a formula we record in its stated-but-wrong form, so
// for it agreement is the alarming outcome and disagreement the expected one.
enum class CheckStatus {
    PASS,
    FAIL,
    EXPECTED_DISCREPANCY_CONFIRMED,
    UNEXPECTED_PASS,
};

std::string to_string(CheckStatus s);
bool is_ok(CheckStatus s);  // PASS or EXPECTED_DISCREPANCY_CONFIRMED

struct CheckReport {
    IdentityId id;
    ParamTuple params;
    // lhs is the side assembled from sums, rhs the reference value it is
    // compared against.  Identities whose sum side is not a priori rational
    // carry the full field element.
    std::variant<Rational, Cyclotomic> lhs;
    Rational rhs;
    CheckStatus status = CheckStatus::FAIL;
    std::int64_t wall_ms = 0;
    std::string note;  // empty unless the instance needs a caveat
};

struct IdentityInfo {
    IdentityId id;
    std::string tag;
    ExpectedStatus expected;
    std::string domain;     // human-readable parameter constraints
    std::string statement;  // one-line description of what is compared
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(IdentityId id);

// Checks identity instances.  A Verifier owns per-order unit tables and memo
// caches for the sums its checks share, so sweeping a family reuses work
// across instances.  All entry points are safe to call concurrently.
class Verifier {
public:
    Verifier();
    ~Verifier();
    Verifier(const Verifier&) = delete;
    Verifier& operator=(const Verifier&) = delete;

    // Whether params names a valid instance for id.  Params outside the
    // domain are rejected, not clamped.
    bool in_domain(IdentityId id, const ParamTuple& params) const;

    // Checks a single instance; throws std::invalid_argument if params is
    // not in the identity's domain.
    CheckReport verify_one(IdentityId id, const ParamTuple& params);

    // All in-domain parameter tuples for id with n <= n_max, sorted.
    std::vector<ParamTuple> enumerate(IdentityId id, int n_max) const;

    // Checks every instance with n <= n_max.  The report order is the
    // enumeration order regardless of jobs, and wall_ms is zeroed so equal
    // sweeps serialize to equal bytes.
    std::vector<CheckReport> sweep(IdentityId id, int n_max, int jobs = 1);
    std::vector<CheckReport> sweep_all(int n_max, int jobs = 1);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace qmhs
