#include "hombracket/errors.hpp"
#include "hombracket/instance.hpp"

namespace hombracket {

namespace {

Cochain mu_nonabelian2() {
    Cochain mu(2, 2);
    mu.set({0, 1}, Vec::basis(2, 1)); // [e1, e2] = e2
    return mu;
}

Cochain mu_sl2() {
    // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    Cochain mu(3, 2);
    mu.set({0, 1}, rat(2) * Vec::basis(3, 1));
    mu.set({0, 2}, rat(-2) * Vec::basis(3, 2));
    mu.set({1, 2}, Vec::basis(3, 0));
    return mu;
}

std::vector<InstanceFile> build_corpus() {
    std::vector<InstanceFile> out;

    {
        InstanceFile f;
        f.name = "abelian2";
        f.dim = 2;
        f.alpha = Matrix::identity(2);
        f.mu = Cochain(2, 2);
        out.push_back(std::move(f));
    }
    {
        InstanceFile f;
        f.name = "nonabelian2";
        f.dim = 2;
        f.alpha = Matrix::diagonal({rat(1), rat(2)});
        f.mu = mu_nonabelian2();
        f.n = f.alpha; // the twist itself is a certified operator
        out.push_back(std::move(f));
    }
    {
        InstanceFile f;
        f.name = "sl2";
        f.dim = 3;
        f.alpha = Matrix::identity(3);
        f.mu = mu_sl2();
        out.push_back(std::move(f));
    }
    {
        // sl2 twisted along the automorphism h -> h, e -> 2e, f -> f/2
        InstanceFile f;
        f.name = "sl2_yau";
        f.dim = 3;
        Matrix aut = Matrix::diagonal({rat(1), rat(2), rat(1, 2)});
        HomLieAlgebra twisted = yau_twist(mu_sl2(), aut);
        f.alpha = aut;
        f.mu = twisted.mu();
        out.push_back(std::move(f));
    }
    {
        InstanceFile f;
        f.name = "bialgebra2";
        f.dim = 2;
        f.alpha = Matrix::diagonal({rat(1), rat(2)});
        f.mu = mu_nonabelian2();
        f.delta = BigElement::monomial(2, {1}, {0, 1}, 1); // delta(e2) = e1 ^ e2
        out.push_back(std::move(f));
    }
    {
        InstanceFile f;
        f.name = "ooperator2";
        f.dim = 2;
        f.alpha = Matrix::diagonal({rat(1), rat(2)});
        f.mu = mu_nonabelian2();
        RepData rd;
        rd.wdim = 2;
        rd.beta = f.alpha;
        // the adjoint action in matrix form
        Matrix r0(2, 2), r1(2, 2);
        r0(1, 1) = 1;  // ad_{e1}: e2 -> e2
        r1(1, 0) = -1; // ad_{e2}: e1 -> -e2
        rd.rho = {r0, r1};
        f.rep = std::move(rd);
        Matrix t(2, 2);
        t(0, 0) = 1;
        f.t = std::move(t);
        out.push_back(std::move(f));
    }
    {
        // an abelian instance with a non-diagonal (unipotent) twist; carries
        // both quasi tensors since the top forms are twist-invariant
        InstanceFile f;
        f.name = "abelian3_shear";
        f.dim = 3;
        f.alpha = Matrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
        f.mu = Cochain(3, 2);
        f.phi = BigElement::monomial(3, {}, {0, 1, 2}, 1);
        f.psi = BigElement::monomial(3, {0, 1, 2}, {}, 1);
        out.push_back(std::move(f));
    }
    {
        // a plain right-symmetric table: unital commutative product on dim 2
        InstanceFile f;
        f.name = "rightsym2";
        f.dim = 2;
        f.alpha = Matrix::identity(2);
        f.mu = Cochain(2, 2);
        StarData sd;
        sd.gamma = Matrix::identity(2);
        sd.table.assign(2, std::vector<Vec>(2, Vec(2)));
        sd.table[0][0] = Vec::basis(2, 0);
        sd.table[0][1] = Vec::basis(2, 1);
        sd.table[1][0] = Vec::basis(2, 1);
        f.star = std::move(sd);
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

const std::vector<InstanceFile>& corpus() {
    static const std::vector<InstanceFile> instances = [] {
        std::vector<InstanceFile> built = build_corpus();
        for (const InstanceFile& f : built) {
            Report rep = f.certify_all();
            if (!rep.passed())
                throw Error("corpus instance " + f.name + " fails its declared checks:\n" +
                            rep.to_text());
        }
        return built;
    }();
    return instances;
}

std::vector<std::pair<std::string, std::string>> corpus_texts() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const InstanceFile& f : corpus())
        out.emplace_back(f.name, f.to_text());
    return out;
}

} // namespace hombracket
