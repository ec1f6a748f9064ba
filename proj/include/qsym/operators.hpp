#pragma once

#include "qsym/partition.hpp"
#include "qsym/ratfunc.hpp"

namespace qsym {

/// @file
/// q-shift and subset-sum difference operators acting on rational
/// functions of the letter alphabet, with the eigenvalues they produce
/// on the graded eigenfunctions.

/// f with x_i replaced by q x_i, or by x_i / q when inverse is set.
RatFunc qshift(const RatFunc& f, int i, bool inverse = false);

/// A difference operator on rational functions of x_1..x_n.  Apply with
/// apply_op; b and c are read only by the kinds that use them.
struct DiffOperator {
    enum class Kind {
        EigenC,             ///< subset sum weighted by (-c)^|I|
        FirstOrder,         ///< single-letter sum, the c-linear part
        TwoParam,           ///< subset sum with b-dependent weights
        InverseFirstOrder,  ///< single-letter sum in inverted q and t
        BoxAdding,          ///< raising operator from inverse shifts
    };
    Kind kind;
    int n = 0;
    RatFunc b, c;
};

DiffOperator op_eigen_c(int n, const RatFunc& c);
DiffOperator op_first_order(int n);
DiffOperator op_two_param(int n, const RatFunc& b, const RatFunc& c);
DiffOperator op_inverse_first_order(int n, const RatFunc& b);
DiffOperator op_box_adding(int n);

/// Apply op to f, which must involve only the letters x_1..x_n besides
/// parameters and be symmetric in them.  The letter-difference factors of
/// the prefactors must cancel from the combined sum; a leftover factor
/// signals an asymmetric input and raises std::logic_error.  Alphabet
/// sizes above four are rejected with std::invalid_argument.
RatFunc apply_op(const DiffOperator& op, const RatFunc& f);

/// prod_{i=1}^n (1 - c q^{lam_i} t^{n-i}), the subset-sum eigenvalue.
RatFunc eigenvalue_product(const Partition& lam, int n, const RatFunc& c);
/// sum_{i=1}^n q^{lam_i} t^{n-i}, the first-order eigenvalue.
RatFunc eigenvalue_sum(const Partition& lam, int n);
/// sum_{i=1}^n q^{-lam_i} t^{i-n}, the first-order eigenvalue with both
/// base parameters inverted.
RatFunc eigenvalue_sum_inverted(const Partition& lam, int n);

}  // namespace qsym
