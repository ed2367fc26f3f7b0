#pragma once

#include <Eigen/SparseCore>

#include "cooc.hpp"

namespace cend {

// Shifted positive PMI: max{ log[ p(x,y) / (p(x) p(y)) ] - log s, 0 } with
// p taken from the co-occurrence counts. Only positive entries are stored.
struct SppmiMatrix {
    Eigen::SparseMatrix<double> matrix;
    double shift = 15.0;
};

SppmiMatrix sppmi(const CooccurrenceCounts& counts, double shift);

} // namespace cend
