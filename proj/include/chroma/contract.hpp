#pragma once

#include <vector>

#include "chroma/cyclo.hpp"

namespace chroma {

// Dense rank-r tensor over qubit legs; labels[0] is the most significant index bit.
template <typename T>
struct Tensor {
  std::vector<int> labels;
  std::vector<T> data;
};

// Contracts all labels shared by a and b. The parallel kernel splits output entries
// across OpenMP threads; the serial kernel is the reference it is tested against.
template <typename T>
Tensor<T> contract_pair_serial(const Tensor<T>& a, const Tensor<T>& b);
template <typename T>
Tensor<T> contract_pair_parallel(const Tensor<T>& a, const Tensor<T>& b);

// Greedy pairwise contraction: repeatedly merges the connected pair whose result has
// the fewest legs. Disconnected pieces are joined by outer products at the end.
template <typename T>
Tensor<T> contract_network(std::vector<Tensor<T>> tensors, bool parallel);

template <typename T>
Tensor<T> permute_labels(const Tensor<T>& t, const std::vector<int>& order);

extern template Tensor<CycloNum> contract_pair_serial(const Tensor<CycloNum>&, const Tensor<CycloNum>&);
extern template Tensor<ApproxNum> contract_pair_serial(const Tensor<ApproxNum>&, const Tensor<ApproxNum>&);
extern template Tensor<CycloNum> contract_pair_parallel(const Tensor<CycloNum>&, const Tensor<CycloNum>&);
extern template Tensor<ApproxNum> contract_pair_parallel(const Tensor<ApproxNum>&, const Tensor<ApproxNum>&);
extern template Tensor<CycloNum> contract_network(std::vector<Tensor<CycloNum>>, bool);
extern template Tensor<ApproxNum> contract_network(std::vector<Tensor<ApproxNum>>, bool);
extern template Tensor<CycloNum> permute_labels(const Tensor<CycloNum>&, const std::vector<int>&);
extern template Tensor<ApproxNum> permute_labels(const Tensor<ApproxNum>&, const std::vector<int>&);

}  // namespace chroma
