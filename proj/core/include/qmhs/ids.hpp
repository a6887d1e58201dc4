#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qmhs {

// Every identity the verifier knows about.  Tags ending in _PRINTED keep a
// formula exactly as our reference source states it even though the stated
// form is wrong on part of its domain; the matching _CORRECTED tag carries
// the repaired form.  Checks of printed-but-wrong forms are expected to
// disagree, and the verifier treats confirmed disagreement as success.
enum class IdentityId {
    THNEG1,
    THNEG2,
    ZZ1M,
    ZZDET,
    EQ11112,
    TH5,
    TH5_REM1,
    TH5_REM2,
    PRP5,
    COR5_PRINTED,
    PRP5_GENERAL_A,
    TH7,
    TH7_REM1,
    PRP7,
    TH9_PRINTED,
    TH9_CORRECTED,
    PRP9_PRINTED,
    PRP9_CORRECTED,
    PRPML11,
    THML11,
    TH222111,
    TH222111_R0,
    TH222111_RM1,
    TH222111_RM,
    PRPMLNEG,
    THMLNEG,
    CONJ_REVERSAL,
};

enum class ExpectedStatus {
    EXPECT_PASS,
    EXPECT_DISCREPANCY,
};

const std::vector<IdentityId>& all_identity_ids();
std::string identity_tag(IdentityId id);
std::optional<IdentityId> identity_from_tag(const std::string& tag);

// Named integer parameters of one identity instance (n, m, l, r, a, b, A, s).
// Iteration order is the map's key order, which keeps every serialized form
// deterministic.
class ParamTuple {
public:
    ParamTuple() = default;
    explicit ParamTuple(std::map<std::string, int> values) : values_(std::move(values)) {}

    bool has(const std::string& name) const { return values_.count(name) != 0; }
    int get(const std::string& name) const;  // throws std::out_of_range
    int get_or(const std::string& name, int fallback) const;
    void set(const std::string& name, int value) { values_[name] = value; }

    const std::map<std::string, int>& values() const { return values_; }

    friend bool operator==(const ParamTuple& a, const ParamTuple& b) {
        return a.values_ == b.values_;
    }
    friend bool operator<(const ParamTuple& a, const ParamTuple& b) {
        return a.values_ < b.values_;
    }

private:
    std::map<std::string, int> values_;
};

}  // namespace qmhs
