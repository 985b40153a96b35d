#include "hombracket/instance.hpp"

#include "hombracket/errors.hpp"

#include <fstream>
#include <sstream>

namespace hombracket {

namespace {

Rational parse_entry(const nlohmann::json& j, const std::string& what) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw ParseError(what + ": rational entries must be strings like \"p/q\"");
}

MultiIndex parse_index_list(const nlohmann::json& j, int dim, const std::string& what) {
    if (!j.is_array())
        throw ParseError(what + ": expected an array of basis indices");
    MultiIndex out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError(what + ": indices must be integers");
        int idx = v.get<int>();
        if (idx < 1 || idx > dim)
            throw ParseError(what + ": index " + std::to_string(idx) + " out of range 1.." +
                             std::to_string(dim));
        if (!out.empty() && idx - 1 <= out.back())
            throw ParseError(what + ": index list must be strictly increasing");
        out.push_back(idx - 1);
    }
    return out;
}

nlohmann::json index_list_to_json(const MultiIndex& t) {
    nlohmann::json j = nlohmann::json::array();
    for (int i : t)
        j.push_back(i + 1);
    return j;
}

Vec parse_vec(const nlohmann::json& j, int len, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != len)
        throw ParseError(what + ": expected an array of " + std::to_string(len) + " rationals");
    Vec v(len);
    for (int i = 0; i < len; ++i)
        v[i] = parse_entry(j[static_cast<size_t>(i)], what);
    return v;
}

nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i)
        j.push_back(to_string(v[i]));
    return j;
}

} // namespace

Matrix parse_matrix(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array() || j.empty())
        throw ParseError(what + ": expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    if (!j[0].is_array())
        throw ParseError(what + ": rows must be arrays");
    const int cols = static_cast<int>(j[0].size());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(what + ": ragged rows");
        for (int c = 0; c < cols; ++c)
            m(i, c) = parse_entry(row[static_cast<size_t>(c)], what);
    }
    return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(i, c)));
        j.push_back(row);
    }
    return j;
}

BigElement parse_big_element(const nlohmann::json& j, int dim, const std::string& what) {
    if (!j.is_array())
        throw ParseError(what + ": expected an array of term records");
    BigElement e(dim);
    for (const auto& rec : j) {
        if (!rec.is_object())
            throw ParseError(what + ": term records must be objects");
        MultiIndex cov = rec.contains("cov") ? parse_index_list(rec["cov"], dim, what + ".cov")
                                             : MultiIndex{};
        MultiIndex vec = rec.contains("vec") ? parse_index_list(rec["vec"], dim, what + ".vec")
                                             : MultiIndex{};
        if (!rec.contains("coeff"))
            throw ParseError(what + ": term record lacks a coeff");
        e.add_term(cov, vec, parse_entry(rec["coeff"], what + ".coeff"));
    }
    return e;
}

nlohmann::json big_element_to_json(const BigElement& e) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [key, c] : e.terms()) {
        nlohmann::json rec;
        rec["cov"] = index_list_to_json(key.first);
        rec["vec"] = index_list_to_json(key.second);
        rec["coeff"] = to_string(c);
        j.push_back(rec);
    }
    return j;
}

Cochain parse_cochain(const nlohmann::json& j, int dim, const std::string& what) {
    if (!j.is_array())
        throw ParseError(what + ": expected an array of records");
    // arity from the first record; an empty list is the zero bracket
    int arity = 2;
    if (!j.empty() && j[0].is_object() && j[0].contains("args"))
        arity = static_cast<int>(j[0]["args"].size());
    Cochain c(dim, arity);
    for (const auto& rec : j) {
        if (!rec.is_object())
            throw ParseError(what + ": records must be objects");
        MultiIndex args;
        Vec value(dim);
        if (rec.contains("args")) {
            args = parse_index_list(rec["args"], dim, what + ".args");
            if (static_cast<int>(args.size()) != arity)
                throw ParseError(what + ": mixed arities in one cochain");
            if (!rec.contains("value"))
                throw ParseError(what + ": record lacks a value");
            value = parse_vec(rec["value"], dim, what + ".value");
        } else if (rec.contains("i") && rec.contains("j") && rec.contains("coeffs")) {
            // structure-constant shorthand for arity-2 brackets
            if (arity != 2)
                throw ParseError(what + ": shorthand records need arity 2");
            int i = rec["i"].get<int>(), jj = rec["j"].get<int>();
            if (i < 1 || jj < 1 || i > dim || jj > dim || i >= jj)
                throw ParseError(what + ": shorthand needs 1 <= i < j <= dim");
            args = {i - 1, jj - 1};
            value = parse_vec(rec["coeffs"], dim, what + ".coeffs");
        } else {
            throw ParseError(what + ": record needs args/value or i/j/coeffs");
        }
        c.set(args, c.value(args) + value);
    }
    return c;
}

nlohmann::json cochain_to_json(const Cochain& c) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [args, value] : c.terms()) {
        nlohmann::json rec;
        rec["args"] = index_list_to_json(args);
        rec["value"] = vec_to_json(value);
        j.push_back(rec);
    }
    return j;
}

InstanceFile InstanceFile::parse(const nlohmann::json& j) {
    if (!j.is_object())
        throw ParseError("instance: expected a JSON object");
    InstanceFile f;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw ParseError("instance.name: expected a string");
        f.name = j["name"].get<std::string>();
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("instance.dim: expected an integer");
    f.dim = j["dim"].get<int>();
    if (f.dim < 1)
        throw ParseError("instance.dim: must be positive");
    if (!j.contains("alpha"))
        throw ParseError("instance.alpha: missing");
    f.alpha = parse_matrix(j["alpha"], "instance.alpha");
    if (f.alpha.rows() != f.dim || f.alpha.cols() != f.dim)
        throw ParseError("instance.alpha: must be a square dim x dim matrix");
    if (!j.contains("mu"))
        throw ParseError("instance.mu: missing");
    f.mu = parse_cochain(j["mu"], f.dim, "instance.mu");
    if (f.mu.arity() != 2)
        throw ParseError("instance.mu: must be an arity-2 bracket");

    if (j.contains("delta")) {
        f.delta = parse_big_element(j["delta"], f.dim, "instance.delta");
        validate_cobracket_shape(*f.delta);
    }
    if (j.contains("phi")) {
        f.phi = parse_big_element(j["phi"], f.dim, "instance.phi");
        validate_phi_shape(*f.phi);
    }
    if (j.contains("psi")) {
        f.psi = parse_big_element(j["psi"], f.dim, "instance.psi");
        validate_psi_shape(*f.psi);
    }
    if (j.contains("n")) {
        f.n = parse_matrix(j["n"], "instance.n");
        if (f.n->rows() != f.dim || f.n->cols() != f.dim)
            throw ParseError("instance.n: must be a square dim x dim matrix");
    }
    if (j.contains("rep")) {
        const auto& r = j["rep"];
        if (!r.is_object() || !r.contains("wdim") || !r.contains("beta") || !r.contains("rho"))
            throw ParseError("instance.rep: needs wdim, beta, rho");
        RepData rd;
        rd.wdim = r["wdim"].get<int>();
        if (rd.wdim < 1)
            throw ParseError("instance.rep.wdim: must be positive");
        rd.beta = parse_matrix(r["beta"], "instance.rep.beta");
        if (rd.beta.rows() != rd.wdim || rd.beta.cols() != rd.wdim)
            throw ParseError("instance.rep.beta: must be wdim x wdim");
        if (!r["rho"].is_array() || static_cast<int>(r["rho"].size()) != f.dim)
            throw ParseError("instance.rep.rho: need one matrix per basis vector");
        for (const auto& m : r["rho"]) {
            Matrix rm = parse_matrix(m, "instance.rep.rho");
            if (rm.rows() != rd.wdim || rm.cols() != rd.wdim)
                throw ParseError("instance.rep.rho: matrices must be wdim x wdim");
            rd.rho.push_back(std::move(rm));
        }
        f.rep = std::move(rd);
    }
    if (j.contains("t")) {
        if (!f.rep)
            throw ParseError("instance.t: needs a rep to map into");
        f.t = parse_matrix(j["t"], "instance.t");
        if (f.t->rows() != f.dim || f.t->cols() != f.rep->wdim)
            throw ParseError("instance.t: must be dim x wdim");
    }
    if (j.contains("star")) {
        const auto& s = j["star"];
        if (!s.is_object() || !s.contains("gamma") || !s.contains("table"))
            throw ParseError("instance.star: needs gamma and table");
        StarData sd;
        sd.gamma = parse_matrix(s["gamma"], "instance.star.gamma");
        if (sd.gamma.rows() != f.dim || sd.gamma.cols() != f.dim)
            throw ParseError("instance.star.gamma: must be dim x dim");
        sd.table.assign(static_cast<size_t>(f.dim), std::vector<Vec>(static_cast<size_t>(f.dim), Vec(f.dim)));
        if (!s["table"].is_array())
            throw ParseError("instance.star.table: expected an array");
        for (const auto& rec : s["table"]) {
            if (!rec.is_object() || !rec.contains("i") || !rec.contains("j") || !rec.contains("value"))
                throw ParseError("instance.star.table: records need i, j, value");
            int i = rec["i"].get<int>(), jj = rec["j"].get<int>();
            if (i < 1 || jj < 1 || i > f.dim || jj > f.dim)
                throw ParseError("instance.star.table: indices out of range");
            sd.table[static_cast<size_t>(i - 1)][static_cast<size_t>(jj - 1)] =
                parse_vec(rec["value"], f.dim, "instance.star.table.value");
        }
        f.star = std::move(sd);
    }
    return f;
}

InstanceFile InstanceFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open instance file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

InstanceFile InstanceFile::parse_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse(j);
}

nlohmann::json InstanceFile::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["dim"] = dim;
    j["alpha"] = matrix_to_json(alpha);
    j["mu"] = cochain_to_json(mu);
    if (delta)
        j["delta"] = big_element_to_json(*delta);
    if (phi)
        j["phi"] = big_element_to_json(*phi);
    if (psi)
        j["psi"] = big_element_to_json(*psi);
    if (n)
        j["n"] = matrix_to_json(*n);
    if (rep) {
        nlohmann::json r;
        r["wdim"] = rep->wdim;
        r["beta"] = matrix_to_json(rep->beta);
        nlohmann::json rho = nlohmann::json::array();
        for (const Matrix& m : rep->rho)
            rho.push_back(matrix_to_json(m));
        r["rho"] = rho;
        j["rep"] = r;
    }
    if (t)
        j["t"] = matrix_to_json(*t);
    if (star) {
        nlohmann::json s;
        s["gamma"] = matrix_to_json(star->gamma);
        nlohmann::json table = nlohmann::json::array();
        for (int i = 0; i < dim; ++i)
            for (int jj = 0; jj < dim; ++jj) {
                const Vec& v = star->table[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                if (v.is_zero())
                    continue;
                nlohmann::json rec;
                rec["i"] = i + 1;
                rec["j"] = jj + 1;
                rec["value"] = vec_to_json(v);
                table.push_back(rec);
            }
        s["table"] = table;
        j["star"] = s;
    }
    return j;
}

std::string InstanceFile::to_text() const {
    return to_json().dump(2) + "\n";
}

HomLieAlgebra InstanceFile::certified() const {
    return HomLieAlgebra::certify(TwistMap(alpha), mu);
}

std::optional<Representation> InstanceFile::certified_rep() const {
    if (!rep)
        return std::nullopt;
    return Representation::certify(certified(), rep->rho, TwistMap(rep->beta));
}

std::vector<std::string> InstanceFile::declared_checks() const {
    std::vector<std::string> out{"lie"};
    if (rep)
        out.push_back("rep");
    if (delta)
        out.push_back("bialgebra");
    if (phi)
        out.push_back("quasi-phi");
    if (psi)
        out.push_back("quasi-psi");
    if (n)
        out.push_back("nijenhuis");
    if (t && rep)
        out.push_back("o-operator");
    if (star || (t && rep))
        out.push_back("right-symmetric");
    return out;
}

Report InstanceFile::certify_all() const {
    Report rep_out;
    rep_out.check = "instance " + name;
    HomLieAlgebra g = certified();
    for (const std::string& check : declared_checks()) {
        bool ok = true;
        if (check == "lie") {
            ok = true; // certified() above already enforced it
        } else if (check == "rep") {
            ok = check_representation(g, rep->rho, TwistMap(rep->beta)).passed();
        } else if (check == "bialgebra") {
            ok = check_bialgebra(g, *delta).passed();
        } else if (check == "quasi-phi") {
            ok = check_lie_quasi_bialgebra(g, delta ? *delta : BigElement(dim), *phi).passed();
        } else if (check == "quasi-psi") {
            ok = check_quasi_lie_bialgebra(g, delta ? *delta : BigElement(dim), *psi).passed();
        } else if (check == "nijenhuis") {
            ok = is_hom_nijenhuis(*n, g).passed();
        } else if (check == "o-operator") {
            Representation r = *certified_rep();
            ok = is_hom_o_operator(*t, g, r).passed();
        } else if (check == "right-symmetric") {
            RightSymmetricAlgebra rs =
                star ? RightSymmetricAlgebra{TwistMap(star->gamma), star->table}
                     : right_symmetric_from_o(*t, g, *certified_rep());
            ok = check_right_symmetric(rs).passed();
        }
        rep_out.add(check, ok, Witness{});
    }
    return rep_out;
}

HomLieAlgebra yau_twist(const Cochain& classical_mu, const Matrix& automorphism) {
    const int dim = classical_mu.dim();
    if (automorphism.rows() != dim || automorphism.cols() != dim)
        throw DimensionMismatch("yau_twist: automorphism shape mismatch");
    for (const MultiIndex& pair : increasing_tuples(dim, 2)) {
        Vec lhs = automorphism.apply(classical_mu.eval_basis(pair));
        Vec rhs = classical_mu.eval(
            {automorphism.column(pair[0]), automorphism.column(pair[1])});
        if (!(lhs == rhs))
            throw NotAutomorphism("yau_twist: the map does not preserve the bracket at pair (" +
                                  std::to_string(pair[0] + 1) + ", " + std::to_string(pair[1] + 1) +
                                  ")");
    }
    return HomLieAlgebra::certify(TwistMap(automorphism),
                                  classical_mu.post_compose(automorphism));
}

} // namespace hombracket
