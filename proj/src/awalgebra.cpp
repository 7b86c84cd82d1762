#include "awgraph/awalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace awgraph {

namespace {

Matrix commutator(const Matrix& x, const Matrix& y)
{
    return x * y - y * x;
}

Matrix weighted_sum(std::span<const TypeData> types, std::span<const Complex> weights)
{
    const auto n = types.front().projector.rows();
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t t = 0; t < types.size(); ++t)
        m += weights[t] * types[t].projector;
    return m;
}

} // namespace

TypeScalars type_scalars(const LeonardSystemData& ls)
{
    return {ls.aW, ls.bW, ls.c, ls.d};
}

CentralElements build_central_elements(std::span<const TypeData> types, std::span<const TypeScalars> scalars,
                                       Complex q, const Matrix& A, const Matrix& Astar, double tol)
{
    if (types.empty() || types.size() != scalars.size())
        throw Error(ErrorKind::InvalidArgument, "one scalar set per type is required");

    std::vector<Complex> a, a_inv, b, b_inv, c, c_inv, lam, lam_inv;
    for (const auto& s : scalars) {
        a.push_back(s.a);
        a_inv.push_back(1.0 / s.a);
        b.push_back(s.b);
        b_inv.push_back(1.0 / s.b);
        c.push_back(s.c);
        c_inv.push_back(1.0 / s.c);
        lam.push_back(std::pow(q, s.d + 1));
        lam_inv.push_back(std::pow(q, -s.d - 1));
    }

    CentralElements ce;
    ce.a = weighted_sum(types, a);
    ce.a_inv = weighted_sum(types, a_inv);
    ce.b = weighted_sum(types, b);
    ce.b_inv = weighted_sum(types, b_inv);
    ce.c = weighted_sum(types, c);
    ce.c_inv = weighted_sum(types, c_inv);
    ce.Lambda = weighted_sum(types, lam);
    ce.Lambda_inv = weighted_sum(types, lam_inv);

    const auto n = A.rows();
    const Matrix I = Matrix::Identity(n, n);
    for (const Matrix* x : {&ce.a, &ce.a_inv, &ce.b, &ce.b_inv, &ce.c, &ce.c_inv, &ce.Lambda, &ce.Lambda_inv})
        ce.commutation_defect
            = std::max({ce.commutation_defect, commutator(*x, A).norm(), commutator(*x, Astar).norm()});
    for (auto [x, y] : {std::pair{&ce.a, &ce.a_inv}, std::pair{&ce.b, &ce.b_inv}, std::pair{&ce.c, &ce.c_inv},
                        std::pair{&ce.Lambda, &ce.Lambda_inv}})
        ce.inverse_defect = std::max(ce.inverse_defect, ((*x) * (*y) - I).norm());

    double magnitude = 1;
    for (const auto& s : scalars)
        magnitude = std::max({magnitude, std::abs(s.a), std::abs(s.b), std::abs(s.c), std::abs(std::pow(q, s.d + 1))});
    const double scale = magnitude * (1 + A.norm() + Astar.norm());
    if (ce.commutation_defect > tol * scale) {
        std::ostringstream msg;
        msg << "central elements fail to commute with A, A*: defect " << ce.commutation_defect;
        throw Error(ErrorKind::CentralityDefect, msg.str());
    }
    return ce;
}

std::array<Matrix, 3> relation_right_hand_sides(const CentralElements& ce, Complex q)
{
    const Matrix a = ce.a + ce.a_inv;
    const Matrix b = ce.b + ce.b_inv;
    const Matrix c = ce.c + ce.c_inv;
    const Matrix lam = ce.Lambda + ce.Lambda_inv;
    const Complex denom = q + 1.0 / q;
    return {(a * lam + b * c) / denom, (b * lam + c * a) / denom, (c * lam + a * b) / denom};
}

std::array<Matrix, 3> central_expressions(const Matrix& A, const Matrix& B, const Matrix& C, Complex q)
{
    const Complex denom = q * q - 1.0 / (q * q);
    auto twisted = [&](const Matrix& y, const Matrix& z) -> Matrix { return (q * y * z - z * y / q) / denom; };
    return {A + twisted(B, C), B + twisted(C, A), C + twisted(A, B)};
}

AWTriple build_C(const NormalizedGenerators& gens, const CentralElements& ce, Complex q, double tol)
{
    const auto rhs = relation_right_hand_sides(ce, q);
    const Complex denom = q * q - 1.0 / (q * q);

    AWTriple triple;
    triple.A = gens.A;
    triple.B = gens.B;
    triple.C = rhs[2] - (q * gens.A * gens.B - gens.B * gens.A / q) / denom;

    const auto expr = central_expressions(triple.A, triple.B, triple.C, q);
    const double operands = 1 + triple.A.norm() + triple.B.norm() + triple.C.norm();
    Residual* slots[3] = {&triple.residuals.awdrg1, &triple.residuals.awdrg2, &triple.residuals.awdrg3};
    for (int k = 0; k < 3; ++k) {
        slots[k]->raw = (expr[k] - rhs[k]).norm();
        slots[k]->relative = slots[k]->raw / (operands + rhs[k].norm());
    }
    for (int k = 0; k < 3; ++k)
        if (slots[k]->relative > tol) {
            std::ostringstream msg;
            msg << "Askey-Wilson relation " << k + 1 << " fails: relative residual " << slots[k]->relative;
            throw Error(ErrorKind::RelationResidual, msg.str());
        }
    return triple;
}

std::array<Residual, 3> verify_centrality(AWTriple& triple, Complex q)
{
    const auto expr = central_expressions(triple.A, triple.B, triple.C, q);
    const double operands = 1 + triple.A.norm() + triple.B.norm() + triple.C.norm();
    std::array<Residual, 3> out;
    for (int k = 0; k < 3; ++k) {
        out[k].raw = std::max(commutator(expr[k], triple.A).norm(), commutator(expr[k], triple.B).norm());
        out[k].relative = out[k].raw / (operands + expr[k].norm());
    }
    triple.residuals.central1 = out[0];
    triple.residuals.central2 = out[1];
    triple.residuals.central3 = out[2];
    return out;
}

Residual verify_T_membership(AWTriple& triple, const AlgebraBasis& basis)
{
    Residual r;
    r.raw = basis.projection_residual(triple.C);
    r.relative = r.raw / (1 + triple.C.norm());
    triple.residuals.membership = r;
    return r;
}

} // namespace awgraph
