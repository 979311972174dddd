#include "pdc/oracle.hpp"

#include <algorithm>
#include <string>

#include "pdc/triangles.hpp"

namespace pdc::oracle {

CapExceeded::CapExceeded(const char* what_name, unsigned n, unsigned cap)
    : std::runtime_error(std::string(what_name) + ": n = " + std::to_string(n) +
                         " exceeds the feasibility cap " + std::to_string(cap) +
                         " (pass --unsafe-cap to override)") {}

namespace {

void check_n(const char* name, unsigned n, unsigned cap) {
  if (n == 0) throw std::invalid_argument(std::string(name) + ": n must be >= 1");
  if (n > cap) throw CapExceeded(name, n, cap);
}

}  // namespace

bool ContingencyTable::valid() const {
  if (rows == 0 || cols == 0 || entries.size() != static_cast<std::size_t>(rows) * cols) {
    return false;
  }
  for (unsigned r = 0; r < rows; ++r) {
    unsigned s = 0;
    for (unsigned c = 0; c < cols; ++c) s += at(r, c);
    if (s == 0) return false;
  }
  for (unsigned c = 0; c < cols; ++c) {
    unsigned s = 0;
    for (unsigned r = 0; r < rows; ++r) s += at(r, c);
    if (s == 0) return false;
  }
  return true;
}

void enumerate_tables(unsigned n, const std::function<void(const ContingencyTable&)>& visit,
                      unsigned cap) {
  check_n("enumerate_tables", n, cap);
  for (unsigned rows = 1; rows <= n; ++rows) {
    for (unsigned cols = 1; cols <= n; ++cols) {
      ContingencyTable t{rows, cols, std::vector<unsigned>(rows * cols, 0)};
      const unsigned cells = rows * cols;
      // Every weak composition of n into the cells, then reject empty lines.
      std::function<void(unsigned, unsigned)> fill = [&](unsigned idx, unsigned left) {
        if (idx + 1 == cells) {
          t.entries[idx] = left;
          if (t.valid()) visit(t);
          return;
        }
        for (unsigned v = 0; v <= left; ++v) {
          t.entries[idx] = v;
          fill(idx + 1, left - v);
        }
        t.entries[idx] = 0;
      };
      fill(0, n);
    }
  }
}

bool is_maximal(const ContingencyTable& t) {
  auto alone_in_row = [&](unsigned r, unsigned c) {
    for (unsigned j = 0; j < t.cols; ++j) {
      if (j != c && t.at(r, j) != 0) return false;
    }
    return true;
  };
  auto alone_in_col = [&](unsigned r, unsigned c) {
    for (unsigned i = 0; i < t.rows; ++i) {
      if (i != r && t.at(i, c) != 0) return false;
    }
    return true;
  };
  for (unsigned r = 0; r + 1 < t.rows; ++r) {
    for (unsigned c = 0; c < t.cols; ++c) {
      if (t.at(r, c) != 0 && t.at(r + 1, c) != 0 && alone_in_row(r, c) && alone_in_row(r + 1, c)) {
        return false;
      }
    }
  }
  for (unsigned r = 0; r < t.rows; ++r) {
    for (unsigned c = 0; c + 1 < t.cols; ++c) {
      if (t.at(r, c) != 0 && t.at(r, c + 1) != 0 && alone_in_col(r, c) && alone_in_col(r, c + 1)) {
        return false;
      }
    }
  }
  return true;
}

ExactInt count_tables(unsigned n, unsigned cap) {
  ExactInt count = 0;
  enumerate_tables(n, [&](const ContingencyTable&) { ++count; }, cap);
  return count;
}

ExactInt count_maximal(unsigned n, unsigned cap) {
  check_n("count_maximal", n, cap);
  ExactInt count = 0;
  enumerate_tables(n, [&](const ContingencyTable& t) {
    if (is_maximal(t)) ++count;
  }, cap);
  return count;
}

PatternCounts count_patterns(unsigned m, unsigned cap) {
  check_n("count_patterns", m, cap);
  PatternCounts out{0, 0};
  for (unsigned rows = 1; rows <= m; ++rows) {
    for (unsigned cols = 1; cols <= m; ++cols) {
      const unsigned cells = rows * cols;
      if (cells < m) continue;
      ContingencyTable t{rows, cols, std::vector<unsigned>(cells, 0)};
      // Choose m of the cells to hold a 1.
      std::function<void(unsigned, unsigned)> choose = [&](unsigned from, unsigned left) {
        if (left == 0) {
          if (t.valid()) {
            ++out.total;
            if (is_maximal(t)) ++out.maximal;
          }
          return;
        }
        for (unsigned i = from; i + left <= cells; ++i) {
          t.entries[i] = 1;
          choose(i + 1, left - 1);
          t.entries[i] = 0;
        }
      };
      choose(0, m);
    }
  }
  return out;
}

std::vector<OrderedPartition> ordered_set_partitions(unsigned n) {
  std::vector<OrderedPartition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<unsigned> label(n, 0);
  for (unsigned blocks = 1; blocks <= n; ++blocks) {
    std::fill(label.begin(), label.end(), 0);
    while (true) {
      OrderedPartition p(blocks, 0);
      for (unsigned e = 0; e < n; ++e) p[label[e]] |= 1U << e;
      bool surjective = true;
      for (std::uint32_t b : p) surjective = surjective && b != 0;
      if (surjective) out.push_back(std::move(p));
      // Next label vector in base `blocks`.
      unsigned pos = 0;
      while (pos < n && ++label[pos] == blocks) label[pos++] = 0;
      if (pos == n) break;
    }
  }
  return out;
}

void enumerate_pairs(unsigned n, const std::function<void(const WeakOrderPair&)>& visit,
                     unsigned cap) {
  check_n("enumerate_pairs", n, cap);
  const std::vector<OrderedPartition> all = ordered_set_partitions(n);
  WeakOrderPair pair;
  pair.n = n;
  for (const OrderedPartition& l : all) {
    for (const OrderedPartition& r : all) {
      pair.left = l;
      pair.right = r;
      visit(pair);
    }
  }
}

namespace {

bool fits_in_some_part(std::uint32_t set, const OrderedPartition& parts) {
  for (std::uint32_t p : parts) {
    if ((set & ~p) == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<Embedding> find_embeddings(const WeakOrderPair& pair) {
  std::vector<Embedding> out;
  for (std::size_t i = 0; i + 1 < pair.left.size(); ++i) {
    if (fits_in_some_part(pair.left[i] | pair.left[i + 1], pair.right)) {
      out.push_back({Side::left, static_cast<unsigned>(i + 1)});
    }
  }
  for (std::size_t i = 0; i + 1 < pair.right.size(); ++i) {
    if (fits_in_some_part(pair.right[i] | pair.right[i + 1], pair.left)) {
      out.push_back({Side::right, static_cast<unsigned>(i + 1)});
    }
  }
  return out;
}

namespace {

// Elements covered by each chain (maximal run of chosen embeddings with
// consecutive indices on one side).
std::vector<std::uint32_t> chain_cover(const WeakOrderPair& pair,
                                       const std::vector<Embedding>& chosen) {
  std::vector<std::uint32_t> chains;
  for (Side side : {Side::left, Side::right}) {
    const OrderedPartition& parts = side == Side::left ? pair.left : pair.right;
    std::vector<bool> marked(parts.size() + 1, false);
    for (const Embedding& e : chosen) {
      if (e.side == side) marked[e.index] = true;
    }
    for (unsigned i = 1; i < marked.size(); ++i) {
      if (!marked[i] || marked[i - 1]) continue;
      std::uint32_t cover = 0;
      unsigned j = i;
      for (; j < marked.size() && marked[j]; ++j) cover |= parts[j - 1] | parts[j];
      chains.push_back(cover);
    }
  }
  return chains;
}

}  // namespace

QOracleResult count_q_oracle(unsigned n, unsigned cap) {
  check_n("count_q_oracle", n, cap);
  QOracleResult out;
  out.q = 0;
  out.qk.assign(n + 1, 0);
  enumerate_pairs(n, [&](const WeakOrderPair& pair) {
    const std::vector<Embedding> emb = find_embeddings(pair);
    const unsigned m = static_cast<unsigned>(emb.size());
    if (m > n) throw std::logic_error("pair has more consecutive embeddings than elements");
    if (m == 0) ++out.q;
    for (unsigned k = 0; k <= m; ++k) out.qk[k] += binomial(m, k);
    for (std::uint32_t subset = 1; subset < (1U << m); ++subset) {
      std::vector<Embedding> chosen;
      for (unsigned i = 0; i < m; ++i) {
        if (subset & (1U << i)) chosen.push_back(emb[i]);
      }
      const std::vector<std::uint32_t> chains = chain_cover(pair, chosen);
      for (std::size_t a = 0; a < chains.size(); ++a) {
        for (std::size_t b = a + 1; b < chains.size(); ++b) {
          if ((chains[a] & chains[b]) != 0) {
            throw std::logic_error("two chains share an element");
          }
        }
      }
      ++out.chain_subsets_checked;
    }
  }, cap);
  return out;
}

ExactInt count_even_partitions_oracle(unsigned t, unsigned c, unsigned cap) {
  if (t > cap) throw CapExceeded("count_even_partitions_oracle", t, cap);
  if (c == 0) return t == 0 ? 1 : 0;
  if (2 * c > t) return 0;  // every block needs at least two elements
  ExactInt count = 0;
  std::vector<unsigned> label(t, 0);
  std::vector<unsigned> size(c);
  while (true) {
    std::fill(size.begin(), size.end(), 0);
    for (unsigned e = 0; e < t; ++e) ++size[label[e]];
    bool ok = true;
    for (unsigned s : size) ok = ok && s > 0 && s % 2 == 0;
    if (ok) ++count;
    unsigned pos = 0;
    while (pos < t && ++label[pos] == c) label[pos++] = 0;
    if (pos == t) break;
  }
  return count;
}

}  // namespace pdc::oracle
