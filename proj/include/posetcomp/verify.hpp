#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posetcomp/brace.hpp"
#include "posetcomp/operad.hpp"

namespace posetcomp {

/// Seeded source of random cochains; coefficients uniform in {-2..2} over Q,
/// uniform in GF(p) otherwise.
class CochainSampler {
public:
    CochainSampler(FieldSpec field, std::uint64_t seed) : field_(field), rng_(seed) {}

    Scalar scalar();
    int uniform(int lo, int hi);
    Cochain cochain(const NervePtr& nerve, int degree);
    RelCochain rel_cochain(const NervePtr& nerve, int degree) { return iota(cochain(nerve, degree)); }
    IncidenceElement incidence(const Poset& p);

private:
    FieldSpec field_;
    std::mt19937_64 rng_;
};

struct CheckResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> witnesses;  ///< at most a few, replayable descriptions
    std::vector<std::string> notes;      ///< informational lines (e.g. localization reports)

    bool passed() const { return failures == 0; }
    void record(bool ok, const std::string& witness);
};

struct SuiteReport {
    std::string suite;
    std::string poset;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
};

struct VerifyOptions {
    int max_degree = 3;
    int trials = 100;
    std::uint64_t seed = 42;
    FieldSpec field;
    DeltaSign delta_sign = DeltaSign::printed;
    /// Test fixture: iota negates degree-2 cochains, which must be caught.
    bool fault_iota_sign_flip = false;
};

const std::vector<std::string>& suite_names();
/// Runs one named suite ("all" expands to every suite).
std::vector<SuiteReport> run_suite(const std::string& suite, const Poset& p, const VerifyOptions& options);

// Individual suites.
SuiteReport verify_simplicial(const NervePtr& nerve, const VerifyOptions& options);
SuiteReport verify_complexes(const NervePtr& nerve, const VerifyOptions& options);
SuiteReport verify_cct(const NervePtr& nerve, const VerifyOptions& options);
SuiteReport verify_cosimplicial(const NervePtr& nerve, const VerifyOptions& options);
SuiteReport verify_operad(const NervePtr& nerve, const VerifyOptions& options);
SuiteReport verify_relative_operad(const NervePtr& nerve, const VerifyOptions& options);
SuiteReport verify_braces(const NervePtr& nerve, const VerifyOptions& options);
SuiteReport verify_bdga(const NervePtr& nerve, const VerifyOptions& options);

std::string describe(const Poset& p, const Chain& c);
template <class Tag>
std::string describe(const BasisVector<Tag>& v) {
    std::string out;
    for (const auto& [c, s] : v.support()) {
        if (!out.empty()) out += " + ";
        out += s.to_string() + "*" + describe(v.poset(), c);
    }
    return out.empty() ? "0" : out;
}

}  // namespace posetcomp
