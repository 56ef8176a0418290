#include "fano/spaces.hpp"

namespace fano {

namespace {

// Self-conjugate partitions come from their Durfee hooks: strictly
// decreasing a_1 > ... > a_d >= 1 with lambda_i = a_i + i - 1.  a_i counts
// the on-or-above-diagonal cells of hook i.
StaircasePattern from_hooks(const std::vector<long>& a) {
  StaircasePattern pat;
  long d = static_cast<long>(a.size());
  for (long i = 0; i < d; ++i) pat.row_lengths.push_back(a[i] + i);
  long lambda1 = pat.row_lengths.empty() ? 0 : pat.row_lengths[0];
  for (long row = d + 1; row <= lambda1; ++row) {
    long c = 0;
    while (c < d && pat.row_lengths[c] >= row) ++c;
    pat.row_lengths.push_back(c);
  }
  return pat;
}

void hook_sequences(long budget, long max_a, long depth, long n, bool alternating,
                    std::vector<long>& cur, std::vector<StaircasePattern>& out) {
  if (budget == 0) {
    if (!cur.empty()) out.push_back(from_hooks(cur));
    return;
  }
  // hook i (0-based depth) contributes a (symmetric) or a-1 (alternating)
  // free cells; lambda_depth = a + depth <= n.
  long hi = std::min(max_a, n - depth);
  long lo = alternating ? 2 : 1;
  for (long a = hi; a >= lo; --a) {
    long cost = alternating ? a - 1 : a;
    if (cost > budget) continue;
    // remaining hooks are strictly smaller; minimal further cost is 0 only
    // if we stop here.
    cur.push_back(a);
    hook_sequences(budget - cost, a - 1, depth + 1, n, alternating, cur, out);
    cur.pop_back();
  }
}

void box_partitions(long budget, long max_part, long rows_left,
                    std::vector<long>& cur, std::vector<StaircasePattern>& out) {
  if (budget == 0) {
    out.push_back(StaircasePattern{cur});
    return;
  }
  if (rows_left == 0) return;
  for (long part = std::min(budget, max_part); part >= 1; --part) {
    cur.push_back(part);
    box_partitions(budget - part, part, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BorelPattern> enumerate_borel_fixed(const Params& p) {
  p.validate();
  long target = p.k + 1;
  bool alternating = p.variant.tag == VariantTag::alternating;
  std::vector<StaircasePattern> pats;
  if (p.variant.tag == VariantTag::rectangular) {
    std::vector<long> cur;
    box_partitions(target, p.n, p.variant.m, cur, pats);
  } else {
    std::vector<long> cur;
    hook_sequences(target, p.n, 0, p.n, alternating, cur, pats);
  }

  std::vector<BorelPattern> out;
  long sm = s_max(p);
  for (auto& pat : pats) {
    BorelPattern bp{std::move(pat), {}};
    for (long s = 0; s <= sm; ++s) {
      bool fits = true;
      for (long i = 0; fits && i < static_cast<long>(bp.shape.row_lengths.size()); ++i)
        for (long j = 0; fits && j < bp.shape.row_lengths[i]; ++j) {
          if (alternating && i == j) continue;
          if (detail_spaces::compression_zero_cell(p, s, i + 1, j + 1)) fits = false;
        }
      if (fits) bp.fits_s.push_back(s);
    }
    if (!bp.fits_s.empty()) out.push_back(std::move(bp));
  }
  std::sort(out.begin(), out.end(), [](const BorelPattern& a, const BorelPattern& b) {
    return a.shape.row_lengths < b.shape.row_lengths;
  });
  return out;
}

}  // namespace fano
