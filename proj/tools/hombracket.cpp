// hombracket: exact-arithmetic checks for twisted Lie-type structures.
//
// Verbs: check, bracket, cohomology, deform, suite, corpus.
// Exit codes: 0 all checks pass, 2 some check fails, 3 precondition
// violation, 4 parse error, 1 usage/internal error.

#include "hombracket/cohomology.hpp"
#include "hombracket/errors.hpp"
#include "hombracket/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace hombracket;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitParse = 4;

struct Options {
    std::string format = "text";
    uint64_t seed = 7;
    int max_dim = 4;
};

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

void print_report(const Report& rep, const Options& opt) {
    if (opt.format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
}

int report_exit(const Report& rep) { return rep.passed() ? kExitPass : kExitFail; }

int run_check(const std::string& kind, const std::string& instance_path,
              const std::string& n_path, const std::string& t_path, const std::string& rep_path,
              const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    InstanceFile inst = InstanceFile::parse_file(instance_path);
    Report rep;
    if (kind == "lie") {
        rep = is_hom_lie(inst.mu, TwistMap(inst.alpha));
    } else {
        HomLieAlgebra g = inst.certified();
        if (kind == "rep") {
            if (!inst.rep)
                throw ParseError("instance declares no representation");
            rep = check_representation(g, inst.rep->rho, TwistMap(inst.rep->beta));
        } else if (kind == "bialgebra") {
            if (!inst.delta)
                throw ParseError("instance declares no cobracket");
            rep = check_bialgebra(g, *inst.delta);
        } else if (kind == "quasi-phi") {
            if (!inst.phi)
                throw ParseError("instance declares no phi");
            rep = check_lie_quasi_bialgebra(g, inst.delta ? *inst.delta : BigElement(inst.dim),
                                            *inst.phi);
        } else if (kind == "quasi-psi") {
            if (!inst.psi)
                throw ParseError("instance declares no psi");
            rep = check_quasi_lie_bialgebra(g, inst.delta ? *inst.delta : BigElement(inst.dim),
                                            *inst.psi);
        } else if (kind == "nijenhuis") {
            Matrix n = n_path.empty()
                           ? (inst.n ? *inst.n
                                     : throw ParseError("no operator: pass --n or add an n field"))
                           : parse_matrix(load_json(n_path), "n");
            rep = is_hom_nijenhuis(n, g);
        } else if (kind == "o-operator") {
            RepData rd;
            if (!rep_path.empty()) {
                nlohmann::json j = load_json(rep_path);
                nlohmann::json wrapper = {{"dim", inst.dim},
                                          {"alpha", matrix_to_json(inst.alpha)},
                                          {"mu", cochain_to_json(inst.mu)},
                                          {"rep", j}};
                rd = *InstanceFile::parse(wrapper).rep;
            } else if (inst.rep) {
                rd = *inst.rep;
            } else {
                throw ParseError("no representation: pass --rep or add a rep field");
            }
            Representation r = Representation::certify(g, rd.rho, TwistMap(rd.beta));
            Matrix t = t_path.empty()
                           ? (inst.t ? *inst.t
                                     : throw ParseError("no operator: pass --t or add a t field"))
                           : parse_matrix(load_json(t_path), "t");
            rep = is_hom_o_operator(t, g, r);
        } else if (kind == "right-symmetric") {
            if (inst.star) {
                rep = check_right_symmetric({TwistMap(inst.star->gamma), inst.star->table});
            } else if (inst.t && inst.rep) {
                Representation r = *inst.certified_rep();
                rep = check_right_symmetric(right_symmetric_from_o(*inst.t, g, r));
            } else {
                throw ParseError("no product: add a star table or o-operator data");
            }
        } else {
            std::cerr << "unknown check kind: " << kind << "\n";
            return kExitUsage;
        }
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    print_report(rep, opt);
    return report_exit(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic checks for twisted Lie-type structures"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized suites");
    app.add_option("--max-dim", opt.max_dim, "dimension cap for randomized suites");

    auto* check = app.add_subcommand("check", "run one verifier on an instance file");
    std::string kind, instance_path, n_path, t_path, rep_path;
    check
        ->add_option("kind", kind,
                     "lie | rep | bialgebra | quasi-phi | quasi-psi | nijenhuis | o-operator | "
                     "right-symmetric")
        ->required();
    check->add_option("instance", instance_path, "instance JSON file")->required();
    check->add_option("--n", n_path, "operator matrix JSON file");
    check->add_option("--t", t_path, "o-operator matrix JSON file");
    check->add_option("--rep", rep_path, "representation JSON file");

    auto* bracket = app.add_subcommand("bracket", "bracket of two exterior-algebra elements");
    std::string alpha_path, a_path, b_path;
    bracket->add_option("--alpha", alpha_path, "twist matrix JSON file")->required();
    bracket->add_option("a", a_path, "first element (array of term records)")->required();
    bracket->add_option("b", b_path, "second element")->required();

    auto* cohom = app.add_subcommand("cohomology", "cohomology dimensions of an instance");
    std::string cohom_instance;
    int max_degree = 3;
    std::string which_rep = "adjoint";
    cohom->add_option("instance", cohom_instance, "instance JSON file")->required();
    cohom->add_option("--max-degree", max_degree, "largest arity to report");
    cohom->add_option("--rep", which_rep, "adjoint | declared");

    auto* deform = app.add_subcommand("deform", "deformation generated by an operator");
    std::string deform_instance, deform_n;
    deform->add_option("instance", deform_instance, "instance JSON file")->required();
    deform->add_option("--n", deform_n, "operator matrix JSON file");

    auto* suite = app.add_subcommand("suite", "run a named property suite over the corpus");
    std::string suite_name;
    suite
        ->add_option("name", suite_name,
                     "axioms | nr | bigbracket | bialgebra | nijenhuis | o-operator | "
                     "cohomology | all")
        ->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "built-in corpus utilities");
    auto* corpus_list = corpus_cmd->add_subcommand("list", "list corpus instances");
    auto* corpus_dump = corpus_cmd->add_subcommand("dump", "write corpus files to a directory");
    std::string dump_dir;
    corpus_dump->add_option("dir", dump_dir, "target directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check)
            return run_check(kind, instance_path, n_path, t_path, rep_path, opt);

        if (*bracket) {
            Matrix alpha = parse_matrix(load_json(alpha_path), "alpha");
            TwistMap twist(alpha);
            BigElement a = parse_big_element(load_json(a_path), twist.dim(), "a");
            BigElement b = parse_big_element(load_json(b_path), twist.dim(), "b");
            BigElement out = big_bracket(a, b, twist);
            if (opt.format == "json")
                std::cout << big_element_to_json(out).dump(2) << "\n";
            else
                std::cout << out.str() << "\n";
            return kExitPass;
        }

        if (*cohom) {
            InstanceFile inst = InstanceFile::parse_file(cohom_instance);
            HomLieAlgebra g = inst.certified();
            Representation r = which_rep == "declared" && inst.rep
                                   ? *inst.certified_rep()
                                   : Representation::adjoint(g);
            auto dims = cohomology_dims(g, r, max_degree);
            if (opt.format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& d : dims)
                    j.push_back({{"degree", d.degree},
                                 {"kernel", d.kernel_dim},
                                 {"image", d.image_dim},
                                 {"h", d.h_dim}});
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& d : dims)
                    std::cout << "degree " << d.degree << ": kernel " << d.kernel_dim
                              << ", image " << d.image_dim << ", H = " << d.h_dim << "\n";
            }
            return kExitPass;
        }

        if (*deform) {
            InstanceFile inst = InstanceFile::parse_file(deform_instance);
            HomLieAlgebra g = inst.certified();
            Matrix n = deform_n.empty()
                           ? (inst.n ? *inst.n
                                     : throw ParseError("no operator: pass --n or add an n field"))
                           : parse_matrix(load_json(deform_n), "n");
            auto [omega, poly] = deformation_from_n(n, g);
            if (opt.format == "json") {
                nlohmann::json j;
                j["omega"] = cochain_to_json(omega);
                nlohmann::json coeffs = nlohmann::json::array();
                for (const Cochain& c : poly.coeffs)
                    coeffs.push_back(cochain_to_json(c));
                j["bracket_t"] = coeffs;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "omega = " << cochain_to_json(omega).dump() << "\n";
                std::cout << "bracket_t coefficients (powers of t):\n";
                for (size_t i = 0; i < poly.coeffs.size(); ++i)
                    std::cout << "  t^" << i << ": " << cochain_to_json(poly.coeffs[i]).dump()
                              << "\n";
            }
            return kExitPass;
        }

        if (*suite) {
            SuiteResult result = run_suite(suite_name, opt.seed, opt.max_dim);
            if (opt.format == "json")
                std::cout << result.to_json().dump(2) << "\n";
            else
                std::cout << result.to_text();
            return result.passed() ? kExitPass : kExitFail;
        }

        if (*corpus_list) {
            for (const InstanceFile& f : corpus()) {
                std::cout << f.name << " (dim " << f.dim << "): checks";
                for (const std::string& c : f.declared_checks())
                    std::cout << " " << c;
                std::cout << "\n";
            }
            return kExitPass;
        }
        if (*corpus_dump) {
            for (const auto& [name, text] : corpus_texts()) {
                std::ofstream out(dump_dir + "/" + name + ".json");
                if (!out)
                    throw Error("cannot write to " + dump_dir);
                out << text;
            }
            return kExitPass;
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotInvertible& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NotHomLie& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NotRepresentation& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const AdAlphaViolation& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NotNijenhuis& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NotOOperator& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NotRightSymmetric& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NotAutomorphism& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const UnknownSuite& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
