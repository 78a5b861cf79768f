#pragma once

#include <string>

#include "qjt/ring.hpp"
#include "qjt/shapes.hpp"

namespace qjt {

struct LRTriple {
    Partition lambda, mu, nu;
    long coeff = 0;
};

// number of LR skew tableaux of shape lambda/mu and content nu
long lr_coeff(const Partition &lambda, const Partition &mu, const Partition &nu);

// symplectic character in z_1..z_n from King tableaux
ClassicalPoly sp_character(const Partition &mu, int n);
// Schur polynomial in z_1..z_m from the classical Jacobi-Trudi determinant
ClassicalPoly schur_polynomial(const Partition &lambda, int m);

// rewrite a polynomial in z_i = y_i y_{i-1}^{-1} (and z_{n+1} = y_n^{-1} for type A)
ClassicalPoly z_to_y_C(const ClassicalPoly &p, int n);
ClassicalPoly z_to_y_A(const ClassicalPoly &p, int n);

struct DecompositionReport {
    Partition lambda;
    int n = 0;
    AlgType type;
    ClassicalPoly lhs, rhs;
    bool equal = false;
    std::vector<LRTriple> terms; // nonzero c^lambda_{2kappa,mu} used on the right

    nlohmann::json to_json() const;
};

DecompositionReport verify_decomposition_C(const Partition &lambda, int n);
DecompositionReport verify_decomposition_A(const Partition &lambda, int n);

} // namespace qjt
