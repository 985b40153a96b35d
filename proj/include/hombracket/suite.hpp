#pragma once

#include "hombracket/instance.hpp"
#include "hombracket/prng.hpp"

namespace hombracket {

/// An ordered bundle of reports from one named suite run. The JSON form is
/// byte-stable for a fixed seed: object keys are sorted, report order is
/// fixed, and no timing or environment data is included.
struct SuiteResult {
    std::string suite;
    uint64_t seed = 0;
    std::vector<Report> reports;

    bool passed() const {
        for (const auto& r : reports)
            if (!r.passed())
                return false;
        return true;
    }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Runs a named suite over the built-in corpus. Names: axioms, nr,
/// bigbracket, bialgebra, nijenhuis, o-operator, cohomology, all.
/// Throws UnknownSuite for anything else.
SuiteResult run_suite(const std::string& name, uint64_t seed, int max_dim = 4);

/// Same, over a caller-supplied instance list (mutation testing hooks in
/// here). Every suite starts by certifying the instances it is given.
SuiteResult run_suite_on(const std::vector<InstanceFile>& instances, const std::string& name,
                         uint64_t seed, int max_dim = 4);

// Individual property drivers, exposed for the acceptance runner. Each is a
// pure function of (instances, seed, max_dim).
Report corpus_certification(const std::vector<InstanceFile>& instances);
Report nr_graded_axioms(const std::vector<InstanceFile>& instances, uint64_t seed, int max_dim);
Report nr_right_symmetry(const std::vector<InstanceFile>& instances, uint64_t seed, int max_dim);
Report big_bracket_axioms(const std::vector<InstanceFile>& instances, uint64_t seed, int max_dim);
Report nr_big_consistency(const std::vector<InstanceFile>& instances, int max_dim);
Report d_squared_everywhere(const std::vector<InstanceFile>& instances, uint64_t seed, int max_dim);
Report cohomology_anchor();
Report bialgebra_equivalence(const std::vector<InstanceFile>& instances, uint64_t seed);
Report nijenhuis_equivalence(const std::vector<InstanceFile>& instances, uint64_t seed, int max_dim);
Report deformation_theorem(const std::vector<InstanceFile>& instances, uint64_t seed, int max_dim);
Report polynomial_and_powers(const std::vector<InstanceFile>& instances, uint64_t seed, int max_dim);
Report o_operator_bridge(const std::vector<InstanceFile>& instances, uint64_t seed);

/// Seeded twist-commuting endomorphism: full matrices against a scalar
/// twist, diagonal matrices against a diagonal one, polynomials in the
/// twist otherwise.
Matrix sample_commuting(SplitMix64& rng, const TwistMap& alpha);

} // namespace hombracket
