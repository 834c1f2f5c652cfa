#include "parsim/oracles/count.hpp"

#include <bit>
#include <chrono>

#include "parsim/core/errors.hpp"

namespace parsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Lane patterns for the six least significant variables: lane index within
// a 64-assignment block encodes variables 1..6, so variable v's truth
// pattern across the block is a fixed constant.
constexpr std::uint64_t kLane[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

// Truth pattern of a positive literal of `var` across the block whose
// high variables (7..n) take the bits of `outer`.
inline std::uint64_t var_pattern(int var, std::uint64_t outer) {
  if (var <= 6) return kLane[var - 1];
  return (outer >> (var - 7)) & 1 ? ~0ULL : 0ULL;
}

void require_sat_budget(const CnfFormula& f, const CountOptions& opt) {
  if (f.num_vars > opt.max_sat_vars)
    throw BudgetError("assignment enumeration over " +
                      std::to_string(f.num_vars) + " variables exceeds the " +
                      std::to_string(opt.max_sat_vars) + "-variable budget");
}

// Shared blockwise driver: calls visit(acc_word, outer) for every block,
// where acc_word has a 1 bit per in-block assignment accepted by `accept`.
template <typename PerClause>
bigint blockwise_count(const CnfFormula& f, PerClause&& clause_word) {
  int n = f.num_vars;
  std::uint64_t block_mask =
      n >= 6 ? ~0ULL : ((1ULL << (std::uint64_t(1) << n)) - 1);
  std::uint64_t outer_blocks = n > 6 ? (1ULL << (n - 6)) : 1;
  bigint total = 0;
  for (std::uint64_t outer = 0; outer < outer_blocks; ++outer) {
    std::uint64_t acc = block_mask;
    for (const Clause& c : f.clauses) {
      acc &= clause_word(c, outer);
      if (!acc) break;
    }
    total += std::popcount(acc);
  }
  return total;
}

std::uint64_t sat_clause_word(const Clause& c, std::uint64_t outer) {
  std::uint64_t w = 0;
  for (Lit l : c) {
    std::uint64_t p = var_pattern(l.var(), outer);
    w |= l.is_pos() ? p : ~p;
  }
  return w;
}

std::uint64_t ex1_clause_word(const Clause& c, std::uint64_t outer) {
  std::uint64_t at_least1 = 0, at_least2 = 0;
  for (Lit l : c) {
    std::uint64_t p = var_pattern(l.var(), outer);
    std::uint64_t t = l.is_pos() ? p : ~p;
    at_least2 |= at_least1 & t;
    at_least1 |= t;
  }
  return at_least1 & ~at_least2;
}

template <typename Pred>
std::vector<Assignment> enumerate_models(const CnfFormula& f, int limit,
                                         const CountOptions& opt,
                                         Pred&& pred) {
  require_sat_budget(f, opt);
  std::vector<Assignment> out;
  std::uint64_t space = std::uint64_t(1) << f.num_vars;
  for (std::uint64_t w = 0; w < space; ++w) {
    Assignment a = Assignment::from_word(f.num_vars, w);
    if (pred(f, a)) {
      out.push_back(std::move(a));
      if (limit > 0 && static_cast<int>(out.size()) >= limit) break;
    }
  }
  return out;
}

template <typename Pred>
void record_enumerated(const CnfFormula& f, const CountOptions& opt,
                       CountReport& r, Pred&& pred) {
  if (opt.enumerate_limit <= 0) return;
  for (const Assignment& a :
       enumerate_models(f, opt.enumerate_limit, opt, pred))
    r.enumerated.push_back(assignment_bits(a));
}

} // namespace

std::string assignment_bits(const Assignment& a) {
  std::string s;
  for (int v = 1; v <= a.size(); ++v) s += a[v] ? '1' : '0';
  return s;
}

CountReport count_sat(const CnfFormula& f, const CountOptions& opt) {
  require_sat_budget(f, opt);
  auto t0 = Clock::now();
  CountReport r;
  r.search_space = bigint(1) << f.num_vars;
  r.count = blockwise_count(f, sat_clause_word);
  record_enumerated(f, opt, r, [](const CnfFormula& g, const Assignment& a) {
    return evaluate(g, a);
  });
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

CountReport count_ex1(const CnfFormula& f, const CountOptions& opt) {
  require_sat_budget(f, opt);
  auto t0 = Clock::now();
  CountReport r;
  r.search_space = bigint(1) << f.num_vars;
  r.count = blockwise_count(f, ex1_clause_word);
  record_enumerated(f, opt, r, [](const CnfFormula& g, const Assignment& a) {
    return evaluate_ex1(g, a);
  });
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

bigint count_sat_reference(const CnfFormula& f) {
  bigint n = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t(1) << f.num_vars); ++w)
    if (evaluate(f, Assignment::from_word(f.num_vars, w))) ++n;
  return n;
}

bigint count_ex1_reference(const CnfFormula& f) {
  bigint n = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t(1) << f.num_vars); ++w)
    if (evaluate_ex1(f, Assignment::from_word(f.num_vars, w))) ++n;
  return n;
}

std::vector<Assignment> enumerate_sat_models(const CnfFormula& f, int limit,
                                             const CountOptions& opt) {
  return enumerate_models(f, limit, opt,
                          [](const CnfFormula& g, const Assignment& a) {
                            return evaluate(g, a);
                          });
}

std::vector<Assignment> enumerate_ex1_models(const CnfFormula& f, int limit,
                                             const CountOptions& opt) {
  return enumerate_models(f, limit, opt,
                          [](const CnfFormula& g, const Assignment& a) {
                            return evaluate_ex1(g, a);
                          });
}

} // namespace parsim
