#pragma once

#include <ostream>
#include <string>

#include "paretond/types.hpp"

namespace paretond {

/// One measurement row of the benchmark CSV.
struct BenchRow {
    std::string family;
    std::size_t d = 0;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    std::string op;         // union | sum | filter
    std::string algorithm;  // plainndred | prend | symnd
    std::string tree;       // nd | qnd | tnd
    std::uint64_t seed = 0;
    std::size_t m = 0;
    std::size_t output_size = 0;
    FilterStats stats;
};

inline const char* bench_csv_header() {
    return "family,d,n_a,n_b,op,algorithm,tree,seed,m,output_size,comparisons,node_visits,"
           "leaf_scans,elapsed_ns";
}

inline void write_csv_row(std::ostream& os, const BenchRow& r) {
    os << r.family << ',' << r.d << ',' << r.n_a << ',' << r.n_b << ',' << r.op << ','
       << r.algorithm << ',' << r.tree << ',' << r.seed << ',' << r.m << ',' << r.output_size
       << ',' << r.stats.comparisons << ',' << r.stats.node_visits << ',' << r.stats.leaf_scans
       << ',' << r.stats.elapsed_ns << '\n';
}

}  // namespace paretond
