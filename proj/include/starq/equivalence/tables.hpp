#ifndef STARQ_EQUIVALENCE_TABLES_HPP
#define STARQ_EQUIVALENCE_TABLES_HPP

#include <string>
#include <vector>

#include <starq/geometry/connection.hpp>
#include <starq/operators/diff_op.hpp>

namespace starq
{

// Reading of the "+ cycl(j1..jr)" shorthand in the fourth-order tables.
enum class CyclicConvention {
    cyclic,             // listed term plus its r - 1 cyclic shifts
    full_symmetrization // sum over all r! orderings of j1..jr
};

std::string to_string(CyclicConvention c);

// Closed-form second-order term of the morphism for the natural cotangent
// product of a flat base connection, on 2n phase-space coordinates.
DiffOp paper_S2_flat(const Connection &c);

// Closed-form fourth-order term assembled from the six coefficient tensors.
DiffOp paper_S4_flat(const Connection &c, CyclicConvention convention = CyclicConvention::cyclic);

// S_2 = -1/24 G_{abc} d^a d^b d^c + 1/16 (G^m_{na} G^n_{mb} + a R_{ab}) d^a d^b,
// with d^a = P^{ab} d_b.
DiffOp paper_S2_symplectic(const SymplecticConnectionSpec &spec);

/// Term-level comparison of a closed-form operator against a derived one.
struct TableComparison {
    bool match = false;
    std::vector<TermDifference> differences;
};

TableComparison compare_operators(const DiffOp &closed_form, const DiffOp &derived);

} // namespace starq

#endif
