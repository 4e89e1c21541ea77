#pragma once

// Exhaustive per-diagram kernels over A_k.
//
// serial:: walks the enumeration stream in one thread and is the reference
// implementation. omp:: splits the stream into restricted-growth-string
// prefix subtrees and runs them under OpenMP; results are identical to the
// serial ones, including the order of filter().

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "parsym/diagram.hpp"
#include "parsym/enumerate.hpp"

namespace parsym::kernels {

using DiagramPredicate = std::function<bool(const PartitionDiagram&)>;
using DiagramStatistic = std::function<std::size_t(const PartitionDiagram&)>;
using Histogram = std::map<std::size_t, std::uint64_t>;

namespace serial {

std::uint64_t count_if(std::size_t order, const DiagramPredicate& pred, std::size_t max_order = kDefaultMaxOrder);
Histogram histogram(std::size_t order, const DiagramStatistic& stat, const DiagramPredicate& pred = {},
                    std::size_t max_order = kDefaultMaxOrder);
std::vector<PartitionDiagram> filter(std::size_t order, const DiagramPredicate& pred,
                                     std::size_t max_order = kDefaultMaxOrder);

}  // namespace serial

namespace omp {

std::uint64_t count_if(std::size_t order, const DiagramPredicate& pred, std::size_t max_order = kDefaultMaxOrder);
Histogram histogram(std::size_t order, const DiagramStatistic& stat, const DiagramPredicate& pred = {},
                    std::size_t max_order = kDefaultMaxOrder);
std::vector<PartitionDiagram> filter(std::size_t order, const DiagramPredicate& pred,
                                     std::size_t max_order = kDefaultMaxOrder);

// Prefix length used to split order-k enumeration into tasks.
std::size_t split_depth(std::size_t order);

}  // namespace omp

}  // namespace parsym::kernels
