#include "chroma/contract.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace chroma {

namespace {

bool is_zero_entry(const CycloNum& v) { return v.is_zero(); }
bool is_zero_entry(const ApproxNum& v) { return v == ApproxNum{}; }

template <typename T>
struct PairPlan {
  std::vector<int> labels;
  std::vector<std::uint64_t> a_base, b_base;  // per free-index bit contribution
  std::vector<std::uint64_t> a_shared, b_shared;
  std::size_t a_free = 0, b_free = 0;
};

// Bit weight of label position p in a tensor of rank r.
std::uint64_t weight(std::size_t p, std::size_t r) { return std::uint64_t{1} << (r - 1 - p); }

template <typename T>
PairPlan<T> plan(const Tensor<T>& a, const Tensor<T>& b) {
  PairPlan<T> pl;
  std::vector<int> shared;
  std::vector<std::size_t> a_free_pos, b_free_pos;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    if (std::find(b.labels.begin(), b.labels.end(), a.labels[i]) != b.labels.end())
      shared.push_back(a.labels[i]);
    else
      a_free_pos.push_back(i);
  }
  for (std::size_t j = 0; j < b.labels.size(); ++j)
    if (std::find(shared.begin(), shared.end(), b.labels[j]) == shared.end()) b_free_pos.push_back(j);
  for (auto p : a_free_pos) pl.labels.push_back(a.labels[p]);
  for (auto p : b_free_pos) pl.labels.push_back(b.labels[p]);
  pl.a_free = a_free_pos.size();
  pl.b_free = b_free_pos.size();

  // Offsets for every assignment of the free bits of a (high part of the result index).
  std::size_t ra = a.labels.size(), rb = b.labels.size();
  pl.a_base.assign(std::size_t{1} << pl.a_free, 0);
  for (std::size_t x = 0; x < pl.a_base.size(); ++x)
    for (std::size_t q = 0; q < pl.a_free; ++q)
      if (x & (std::size_t{1} << (pl.a_free - 1 - q))) pl.a_base[x] += weight(a_free_pos[q], ra);
  pl.b_base.assign(std::size_t{1} << pl.b_free, 0);
  for (std::size_t x = 0; x < pl.b_base.size(); ++x)
    for (std::size_t q = 0; q < pl.b_free; ++q)
      if (x & (std::size_t{1} << (pl.b_free - 1 - q))) pl.b_base[x] += weight(b_free_pos[q], rb);
  std::size_t ns = shared.size();
  pl.a_shared.assign(std::size_t{1} << ns, 0);
  pl.b_shared.assign(std::size_t{1} << ns, 0);
  for (std::size_t s = 0; s < pl.a_shared.size(); ++s)
    for (std::size_t q = 0; q < ns; ++q) {
      if (!(s & (std::size_t{1} << (ns - 1 - q)))) continue;
      auto pa = std::find(a.labels.begin(), a.labels.end(), shared[q]) - a.labels.begin();
      auto pb = std::find(b.labels.begin(), b.labels.end(), shared[q]) - b.labels.begin();
      pl.a_shared[s] += weight(pa, ra);
      pl.b_shared[s] += weight(pb, rb);
    }
  return pl;
}

template <typename T>
T entry(const Tensor<T>& a, const Tensor<T>& b, const PairPlan<T>& pl, std::size_t r) {
  std::size_t ax = r >> pl.b_free;
  std::size_t bx = r & ((std::size_t{1} << pl.b_free) - 1);
  std::uint64_t ab = pl.a_base[ax], bb = pl.b_base[bx];
  T acc{};
  for (std::size_t s = 0; s < pl.a_shared.size(); ++s) {
    const T& x = a.data[ab + pl.a_shared[s]];
    if (is_zero_entry(x)) continue;
    const T& y = b.data[bb + pl.b_shared[s]];
    if (is_zero_entry(y)) continue;
    acc += x * y;
  }
  return acc;
}

}  // namespace

template <typename T>
Tensor<T> contract_pair_serial(const Tensor<T>& a, const Tensor<T>& b) {
  auto pl = plan(a, b);
  Tensor<T> r;
  r.labels = pl.labels;
  r.data.resize(std::size_t{1} << r.labels.size());
  for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = entry(a, b, pl, i);
  return r;
}

template <typename T>
Tensor<T> contract_pair_parallel(const Tensor<T>& a, const Tensor<T>& b) {
  auto pl = plan(a, b);
  Tensor<T> r;
  r.labels = pl.labels;
  const std::int64_t n = std::int64_t{1} << r.labels.size();
  r.data.resize(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (n * static_cast<std::int64_t>(pl.a_shared.size()) >= 4096)
  for (std::int64_t i = 0; i < n; ++i) r.data[i] = entry(a, b, pl, static_cast<std::size_t>(i));
  return r;
}

template <typename T>
Tensor<T> permute_labels(const Tensor<T>& t, const std::vector<int>& order) {
  if (order.size() != t.labels.size()) throw std::invalid_argument("permute_labels: rank mismatch");
  std::size_t r = order.size();
  std::vector<std::size_t> src_pos(r);
  for (std::size_t q = 0; q < r; ++q) {
    auto it = std::find(t.labels.begin(), t.labels.end(), order[q]);
    if (it == t.labels.end()) throw std::invalid_argument("permute_labels: unknown label");
    src_pos[q] = static_cast<std::size_t>(it - t.labels.begin());
  }
  Tensor<T> out;
  out.labels = order;
  out.data.resize(t.data.size());
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    std::uint64_t src = 0;
    for (std::size_t q = 0; q < r; ++q)
      if (i & (std::size_t{1} << (r - 1 - q))) src += weight(src_pos[q], r);
    out.data[i] = t.data[src];
  }
  return out;
}

template <typename T>
Tensor<T> contract_network(std::vector<Tensor<T>> ts, bool parallel) {
  if (ts.empty()) {
    Tensor<T> one;
    one.data = {T(1)};
    return one;
  }
  auto merged_rank = [](const Tensor<T>& a, const Tensor<T>& b, bool& shares) {
    std::size_t common = 0;
    for (int l : a.labels)
      if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) ++common;
    shares = common > 0;
    return a.labels.size() + b.labels.size() - 2 * common;
  };
  while (ts.size() > 1) {
    std::size_t bi = 0, bj = 1, best = SIZE_MAX;
    bool found_shared = false;
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        bool shares = false;
        std::size_t rank = merged_rank(ts[i], ts[j], shares);
        if (shares && (!found_shared || rank < best)) {
          found_shared = true;
          best = rank;
          bi = i;
          bj = j;
        } else if (!found_shared && rank < best) {
          best = rank;
          bi = i;
          bj = j;
        }
      }
    Tensor<T> merged = parallel ? contract_pair_parallel(ts[bi], ts[bj]) : contract_pair_serial(ts[bi], ts[bj]);
    ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(bj));
    ts[bi] = std::move(merged);
  }
  return std::move(ts.front());
}

template Tensor<CycloNum> contract_pair_serial(const Tensor<CycloNum>&, const Tensor<CycloNum>&);
template Tensor<ApproxNum> contract_pair_serial(const Tensor<ApproxNum>&, const Tensor<ApproxNum>&);
template Tensor<CycloNum> contract_pair_parallel(const Tensor<CycloNum>&, const Tensor<CycloNum>&);
template Tensor<ApproxNum> contract_pair_parallel(const Tensor<ApproxNum>&, const Tensor<ApproxNum>&);
template Tensor<CycloNum> contract_network(std::vector<Tensor<CycloNum>>, bool);
template Tensor<ApproxNum> contract_network(std::vector<Tensor<ApproxNum>>, bool);
template Tensor<CycloNum> permute_labels(const Tensor<CycloNum>&, const std::vector<int>&);
template Tensor<ApproxNum> permute_labels(const Tensor<ApproxNum>&, const std::vector<int>&);

}  // namespace chroma
