#pragma once

#include <optional>

#include "pairshare/ratfunc.hpp"

namespace pairshare {

struct ValuePair {
    Value a, b;
};

// claimed shared pairs (a_nu, b_nu) with per-pair CM flags
struct SharedPairSpec {
    std::vector<ValuePair> pairs;
    std::vector<bool> cm_flags;  // empty = no claims

    void validate() const;  // a's pairwise distinct, b's pairwise distinct
};

enum class Verdict { SharedCM, SharedIM, NotShared };

std::string verdict_str(Verdict v);

// one common solution class with its ordered local multiplicities
struct PatternClass {
    Poly1 pointclass;  // monic squarefree; zero polynomial encodes the inf class
    bool at_inf = false;
    int mult_q = 0;   // multiplicity on the Q side
    int mult_qt = 0;  // multiplicity on the Qt side
};

struct PatternReport {
    std::vector<PatternClass> classes;
    int count_p1 = 0;       // classes of shape (p:1), p > 1 (weighted by degree)
    int count_1q = 0;       // classes of shape (1:q), q > 1
    int count_11 = 0;       // simple-simple classes
    std::optional<int> p;   // the common p when all (p:1) classes agree
    std::optional<int> q;   // the common q
    bool violation = false; // some class has both multiplicities >= 2, or mixed p/q
    std::string note;
};

struct PairResult {
    ValuePair pair;
    Verdict verdict = Verdict::NotShared;
    Divisor div_q, div_qt;        // restricted divisors
    PointSet punctures_needed;    // sym-difference of the supports
    std::optional<Poly1> witness; // CM witness / separating class
    bool witness_at_inf = false;
    PatternReport pattern;
};

struct SharingCertificate {
    std::vector<PairResult> pairs;
    PointSet punctures;  // minimal omitted set accumulated over all pairs
    bool feasible = false;       // punctures fit the Picard capacity (<= 2 points)
    bool excluded_mobius = false;  // Qt = M o Q
    bool all_shared = false;
    bool cm_claims_hold = true;
};

// verdict for one pair with an explicitly supplied puncture set
PairResult check_pair(const RatFunc& q, const RatFunc& qt, const ValuePair& pair,
                      const PointSet& punctures);

// multiplicity classes of a shared pair off the punctures
PatternReport multiplicity_pattern(const RatFunc& q, const RatFunc& qt,
                                   const ValuePair& pair, const PointSet& punctures);

// full certificate: punctures are computed, not supplied
SharingCertificate sharing_certificate(const RatFunc& q, const RatFunc& qt,
                                       const SharedPairSpec& spec);

// true iff qt = M o q for a Mobius map M (detected through 3 fibers)
bool mobius_relation_guard(const RatFunc& q, const RatFunc& qt,
                           MobiusMap* out = nullptr);

// Theorem-hypothesis helpers on top of pattern reports:
// every common class of every pair has total multiplicity >= 3
bool zeros_all_multiplicity_at_least(const std::vector<PairResult>& pairs, int bound);
// per pair: the Q side has only multiple classes, or the Qt side does
bool one_side_only_multiple(const std::vector<PairResult>& pairs);

}  // namespace pairshare
