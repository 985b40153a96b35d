#pragma once

#include "hombracket/bialgebra.hpp"
#include "hombracket/nijenhuis.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hombracket {

struct RepData {
    int wdim = 0;
    Matrix beta;
    std::vector<Matrix> rho;
};

struct StarData {
    Matrix gamma;
    std::vector<std::vector<Vec>> table;
};

/// A declarative description of one algebra instance: the twist and
/// structure constants, plus any optional structure tensors the checks
/// need. Parsing validates shapes and exact-rational syntax; serialization
/// is canonical and round-trips bit-exactly.
struct InstanceFile {
    std::string name;
    int dim = 0;
    Matrix alpha;
    Cochain mu;
    std::optional<BigElement> delta;
    std::optional<BigElement> phi;
    std::optional<BigElement> psi;
    std::optional<Matrix> n;
    std::optional<Matrix> t;
    std::optional<RepData> rep;
    std::optional<StarData> star;

    static InstanceFile parse(const nlohmann::json& j);
    static InstanceFile parse_file(const std::string& path);
    static InstanceFile parse_text(const std::string& text);
    nlohmann::json to_json() const;
    std::string to_text() const; // canonical pretty form with trailing newline

    /// Certified hom-Lie algebra (throws NotInvertible / NotHomLie).
    HomLieAlgebra certified() const;
    /// Certified declared representation, when present.
    std::optional<Representation> certified_rep() const;

    /// Names of the checks this instance declares through its fields.
    std::vector<std::string> declared_checks() const;
    /// Runs every declared check; one condition per check.
    Report certify_all() const;
};

/// Hom-Lie algebra built from classical structure constants and one of
/// their automorphisms by post-composing the bracket with it. The result
/// is certified before being returned; failures surface as exceptions
/// (NotAutomorphism / NotHomLie), never as silent inclusion.
HomLieAlgebra yau_twist(const Cochain& classical_mu, const Matrix& automorphism);

/// The built-in corpus of certified instances. Loaded once; every instance
/// passes its declared checks.
const std::vector<InstanceFile>& corpus();

/// Canonical JSON text of each corpus instance, keyed by name.
std::vector<std::pair<std::string, std::string>> corpus_texts();

// shared JSON helpers (also used by the CLI for standalone files)
Matrix parse_matrix(const nlohmann::json& j, const std::string& what);
nlohmann::json matrix_to_json(const Matrix& m);
BigElement parse_big_element(const nlohmann::json& j, int dim, const std::string& what);
nlohmann::json big_element_to_json(const BigElement& e);
Cochain parse_cochain(const nlohmann::json& j, int dim, const std::string& what);
nlohmann::json cochain_to_json(const Cochain& c);

} // namespace hombracket
