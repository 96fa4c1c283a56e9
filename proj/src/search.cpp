#include "ame/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <thread>

#include "ame/gf.hpp"
#include "ame/rs.hpp"

namespace ame {

namespace {

int hardware_workers(int workers) {
  if (workers < 0) throw Error("invalid-params", "workers must be >= 0");
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

struct Grid {
  int d = 0;
  std::vector<int> cells;                // row-major, -1 empty
  std::vector<std::uint32_t> row_used;   // symbol bitmasks
  std::vector<std::uint32_t> col_used;
};

/// Reduced-square scaffold: first row 0..d-1, first column 0..d-1.
Grid reduced_scaffold(int d) {
  Grid g;
  g.d = d;
  g.cells.assign(static_cast<std::size_t>(d) * d, -1);
  g.row_used.assign(d, 0);
  g.col_used.assign(d, 0);
  for (int j = 0; j < d; ++j) {
    g.cells[j] = j;
    g.col_used[j] |= 1u << j;
  }
  g.row_used[0] = (d == 32) ? ~0u : (1u << d) - 1;
  for (int i = 1; i < d; ++i) {
    g.cells[static_cast<std::size_t>(i) * d] = i;
    g.row_used[i] |= 1u << i;
  }
  g.col_used[0] = g.row_used[0];
  return g;
}

void place(Grid& g, int r, int c, int s) {
  g.cells[static_cast<std::size_t>(r) * g.d + c] = s;
  g.row_used[r] |= 1u << s;
  g.col_used[c] |= 1u << s;
}

void unplace(Grid& g, int r, int c, int s) {
  g.cells[static_cast<std::size_t>(r) * g.d + c] = -1;
  g.row_used[r] &= ~(1u << s);
  g.col_used[c] &= ~(1u << s);
}

/// Fills cells (r,1)..(d-1,d-1) in row-major order, trying symbols
/// ascending, so completed grids appear in lexicographic order. emit
/// returns false to stop the whole enumeration.
template <typename Emit>
bool fill_squares(Grid& g, int r, int c, Emit&& emit) {
  if (r == g.d) return emit(g);
  std::uint32_t free =
      ~(g.row_used[r] | g.col_used[c]) & ((1u << g.d) - 1);
  while (free != 0) {
    int s = std::countr_zero(free);
    free &= free - 1;
    place(g, r, c, s);
    bool keep_going = (c == g.d - 1)
                          ? fill_squares(g, r + 1, 1, emit)
                          : fill_squares(g, r, c + 1, emit);
    unplace(g, r, c, s);
    if (!keep_going) return false;
  }
  return true;
}

LatinHypercube grid_to_square(const Grid& g) {
  std::vector<Symbol> values(g.cells.size());
  for (std::size_t i = 0; i < g.cells.size(); ++i)
    values[i] = static_cast<Symbol>(g.cells[i]);
  return LatinHypercube::make(2, g.d, std::move(values));
}

void check_order(int d) {
  if (d < 1) throw Error("invalid-params", "order must be >= 1");
  if (d > 7)
    throw Error("out-of-range",
                "reduced-square enumeration is capped at order 7");
}

/// Valid second rows of a reduced square, in lexicographic order: the
/// parallel search partitions its work by these.
std::vector<std::vector<int>> second_rows(int d) {
  std::vector<std::vector<int>> rows;
  std::vector<int> row(d, -1);
  row[0] = 1;
  std::uint32_t used = 1u << 1;
  auto rec = [&](auto&& self, int c) -> void {
    if (c == d) {
      rows.push_back(row);
      return;
    }
    std::uint32_t free = ~used & ((1u << d) - 1) & ~(1u << c);
    while (free != 0) {
      int s = std::countr_zero(free);
      free &= free - 1;
      row[c] = s;
      used |= 1u << s;
      self(self, c + 1);
      used &= ~(1u << s);
      row[c] = -1;
    }
  };
  rec(rec, 1);
  return rows;
}

void require_square(const LatinHypercube& square) {
  if (square.k != 2)
    throw Error("shape-mismatch", "expected a latin square (k = 2)");
  if (!is_latin(square))
    throw Error("not-latin", "input square violates the latin property");
}

std::vector<std::uint64_t> transversal_masks(
    const std::vector<Transversal>& transversals, int d) {
  std::vector<std::uint64_t> masks;
  masks.reserve(transversals.size());
  for (const auto& t : transversals) {
    std::uint64_t m = 0;
    for (auto [r, c] : t.cells)
      m |= 1ULL << (r * d + c);
    masks.push_back(m);
  }
  return masks;
}

/// Exact cover of the d^2 cells by d disjoint transversals, deterministic
/// depth-first with least-branching cell selection. Returns the chosen
/// transversal indices, or nullopt.
std::optional<std::vector<int>> cover_cells(
    int d, const std::vector<std::uint64_t>& masks) {
  int n_cells = d * d;
  std::uint64_t full = (n_cells == 64) ? ~0ULL : (1ULL << n_cells) - 1;
  std::vector<std::vector<int>> cell_to_masks(n_cells);
  for (int i = 0; i < static_cast<int>(masks.size()); ++i)
    for (int cell = 0; cell < n_cells; ++cell)
      if (masks[i] >> cell & 1) cell_to_masks[cell].push_back(i);

  std::vector<int> chosen;
  std::uint64_t covered = 0;
  auto rec = [&](auto&& self) -> bool {
    if (covered == full) return true;
    int best_cell = -1;
    int best_count = INT_MAX;
    for (int cell = 0; cell < n_cells; ++cell) {
      if (covered >> cell & 1) continue;
      int count = 0;
      for (int i : cell_to_masks[cell])
        if ((masks[i] & covered) == 0) ++count;
      if (count < best_count) {
        best_count = count;
        best_cell = cell;
        if (count == 0) return false;
      }
    }
    for (int i : cell_to_masks[best_cell]) {
      if ((masks[i] & covered) != 0) continue;
      covered |= masks[i];
      chosen.push_back(i);
      if (self(self)) return true;
      chosen.pop_back();
      covered &= ~masks[i];
    }
    return false;
  };
  if (!rec(rec)) return std::nullopt;
  return chosen;
}

LatinHypercube mate_from_cover(const LatinHypercube& square,
                               const std::vector<std::uint64_t>& masks,
                               const std::vector<int>& chosen) {
  int d = square.d;
  // Symbol s goes to the transversal covering cell (0, s); sorting the
  // chosen transversals by their row-0 column makes the mate's first row
  // the identity and the mate independent of cover search order.
  std::vector<int> order(chosen.begin(), chosen.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return (masks[a] & ((1ULL << d) - 1)) < (masks[b] & ((1ULL << d) - 1));
  });
  std::vector<Symbol> values(static_cast<std::size_t>(d) * d);
  for (int s = 0; s < d; ++s)
    for (int cell = 0; cell < d * d; ++cell)
      if (masks[order[s]] >> cell & 1)
        values[cell] = static_cast<Symbol>(s);
  LatinHypercube mate = LatinHypercube::make(2, d, std::move(values));
  if (!are_orthogonal(square, mate))
    throw Error("internal", "exact-cover mate fails the orthogonality check");
  return mate;
}

struct BlockResult {
  bool completed = false;  // block fully scanned, or stopped at its mate
  bool mate_found = false;
  long long examined = 0;
  TransversalStats stats;
  std::optional<std::pair<LatinHypercube, LatinHypercube>> witness;
};

/// Scans one second-row block in lexicographic order. Returns early (not
/// completed) when best_block drops below this block's index.
BlockResult scan_block(int d, const std::vector<int>& row1,
                       long long block_index,
                       std::atomic<long long>& best_block) {
  BlockResult result;
  Grid g = reduced_scaffold(d);
  for (int c = 1; c < d; ++c) place(g, 1, c, row1[c]);
  bool aborted = false;
  fill_squares(g, 2, 1, [&](const Grid& done) {
    if (block_index > best_block.load()) {
      aborted = true;
      return false;
    }
    LatinHypercube square = grid_to_square(done);
    auto transversals = find_transversals(square);
    result.stats.add_square(static_cast<int>(transversals.size()));
    ++result.examined;
    if (transversals.size() >= static_cast<std::size_t>(d)) {
      auto masks = transversal_masks(transversals, d);
      if (auto chosen = cover_cells(d, masks)) {
        result.mate_found = true;
        result.witness = {square, mate_from_cover(square, masks, *chosen)};
        long long cur = best_block.load();
        while (block_index < cur &&
               !best_block.compare_exchange_weak(cur, block_index)) {
        }
        return false;
      }
    }
    return true;
  });
  result.completed = !aborted;
  return result;
}

}  // namespace

void TransversalStats::add_square(int count) {
  if (squares == 0 || count < min_per_square) min_per_square = count;
  if (count > max_per_square) max_per_square = count;
  ++squares;
  total += count;
  if (count == 0) ++squares_with_zero;
  ++histogram[count];
}

void TransversalStats::merge(const TransversalStats& other) {
  if (other.squares == 0) return;
  if (squares == 0 || other.min_per_square < min_per_square)
    min_per_square = other.min_per_square;
  if (other.max_per_square > max_per_square)
    max_per_square = other.max_per_square;
  squares += other.squares;
  total += other.total;
  squares_with_zero += other.squares_with_zero;
  for (const auto& [count, num] : other.histogram) histogram[count] += num;
}

long long enumerate_reduced(
    int d, const std::function<bool(const ReducedSquare&)>& visit) {
  check_order(d);
  long long count = 0;
  Grid g = reduced_scaffold(d);
  fill_squares(g, 1, 1, [&](const Grid& done) {
    ++count;
    return visit(ReducedSquare{d, grid_to_square(done)});
  });
  return count;
}

long long count_reduced(int d) {
  check_order(d);
  long long count = 0;
  Grid g = reduced_scaffold(d);
  fill_squares(g, 1, 1, [&](const Grid&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Transversal> find_transversals(const LatinHypercube& square) {
  require_square(square);
  int d = square.d;
  std::vector<Transversal> out;
  std::vector<int> col_of_row(d, -1);
  auto rec = [&](auto&& self, int r, std::uint32_t cols,
                 std::uint32_t syms) -> void {
    if (r == d) {
      Transversal t;
      t.cells.reserve(d);
      for (int i = 0; i < d; ++i) t.cells.emplace_back(i, col_of_row[i]);
      out.push_back(std::move(t));
      return;
    }
    for (int c = 0; c < d; ++c) {
      if (cols >> c & 1) continue;
      Symbol s = square.values[static_cast<std::size_t>(r) * d + c];
      if (syms >> s & 1) continue;
      col_of_row[r] = c;
      self(self, r + 1, cols | (1u << c), syms | (1u << s));
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::optional<LatinHypercube> has_orthogonal_mate(
    const LatinHypercube& square) {
  require_square(square);
  int d = square.d;
  auto transversals = find_transversals(square);
  if (transversals.size() < static_cast<std::size_t>(d)) return std::nullopt;
  auto masks = transversal_masks(transversals, d);
  auto chosen = cover_cells(d, masks);
  if (!chosen) return std::nullopt;
  return mate_from_cover(square, masks, *chosen);
}

std::optional<LatinHypercube> find_mate_direct(const LatinHypercube& square) {
  require_square(square);
  int d = square.d;
  std::vector<Symbol> mate(static_cast<std::size_t>(d) * d, 0);
  std::vector<std::uint32_t> row_used(d, 0), col_used(d, 0);
  std::vector<std::uint32_t> pair_used(d, 0);  // pair_used[L][M] as bitmask
  auto rec = [&](auto&& self, int r, int c) -> bool {
    if (r == d) return true;
    int next_r = (c == d - 1) ? r + 1 : r;
    int next_c = (c == d - 1) ? 0 : c + 1;
    // Mates are sought in reduced-first-row form: the first row of any
    // orthogonal mate can be renamed to the identity without affecting
    // orthogonality, so fixing it loses no decisions.
    Symbol l = square.values[static_cast<std::size_t>(r) * d + c];
    std::uint32_t free = ~(row_used[r] | col_used[c] | pair_used[l]) &
                         ((1u << d) - 1);
    while (free != 0) {
      int s = std::countr_zero(free);
      free &= free - 1;
      mate[static_cast<std::size_t>(r) * d + c] = static_cast<Symbol>(s);
      row_used[r] |= 1u << s;
      col_used[c] |= 1u << s;
      pair_used[l] |= 1u << s;
      if (self(self, next_r, next_c)) return true;
      row_used[r] &= ~(1u << s);
      col_used[c] &= ~(1u << s);
      pair_used[l] &= ~(1u << s);
    }
    return false;
  };
  for (int j = 0; j < d; ++j) {
    mate[j] = static_cast<Symbol>(j);
    row_used[0] |= 1u << j;
    col_used[j] = 1u << j;
    Symbol l = square.values[j];
    pair_used[l] |= 1u << j;
  }
  if (d == 1 || rec(rec, 1, 0)) {
    LatinHypercube m = LatinHypercube::make(2, d, std::move(mate));
    if (!are_orthogonal(square, m))
      throw Error("internal", "direct mate fails the orthogonality check");
    return m;
  }
  return std::nullopt;
}

SearchCertificate orthogonal_pair_exists(int d, int workers) {
  check_order(d);
  auto started = std::chrono::steady_clock::now();
  SearchCertificate cert;
  cert.order = d;
  cert.note =
      "Search restricted to reduced squares: permuting rows, permuting "
      "columns, and renaming symbols in the first square of an orthogonal "
      "pair (with the same row/column moves applied to the second) "
      "preserves orthogonality, and every latin square reduces under such "
      "moves.";

  if (d == 1) {
    LatinHypercube square = LatinHypercube::make(2, 1, {0});
    auto mate = has_orthogonal_mate(square);
    cert.squares_examined = 1;
    cert.stats.add_square(1);
    cert.squares_with_mate = mate ? 1 : 0;
    cert.verdict = mate ? "exists" : "not-exists";
    if (mate) cert.witness = {square, *mate};
    cert.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    return cert;
  }

  auto blocks = second_rows(d);
  int nworkers =
      std::min<int>(hardware_workers(workers),
                    static_cast<int>(blocks.size()));
  std::vector<BlockResult> results(blocks.size());
  std::atomic<long long> next_block{0};
  std::atomic<long long> best_block{LLONG_MAX};

  auto work = [&] {
    while (true) {
      long long b = next_block.fetch_add(1);
      if (b >= static_cast<long long>(blocks.size())) break;
      if (b > best_block.load()) continue;
      results[b] = scan_block(d, blocks[b], b, best_block);
    }
  };
  if (nworkers <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (int w = 0; w < nworkers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  long long winner = -1;
  for (long long b = 0; b < static_cast<long long>(blocks.size()); ++b) {
    if (results[b].mate_found) {
      winner = b;
      break;
    }
  }

  if (winner >= 0) {
    // Deterministic policy: the certificate covers exactly the
    // lexicographic prefix ending at the first mate-holding square; work
    // other threads did past that point is discarded.
    cert.verdict = "exists";
    cert.squares_with_mate = 1;
    for (long long b = 0; b < winner; ++b) {
      if (!results[b].completed || results[b].mate_found)
        throw Error("internal", "block before the winning block not settled");
      cert.squares_examined += results[b].examined;
      cert.stats.merge(results[b].stats);
    }
    cert.squares_examined += results[winner].examined;
    cert.stats.merge(results[winner].stats);
    cert.witness = results[winner].witness;
  } else {
    cert.verdict = "not-exists";
    for (const auto& r : results) {
      if (!r.completed)
        throw Error("internal", "not-exists verdict with an unfinished block");
      cert.squares_examined += r.examined;
      cert.stats.merge(r.stats);
    }
  }
  cert.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return cert;
}

AmeState construct_ame_state(int n, int d) {
  if (n < 2 || d < 2)
    throw Error("invalid-params", "need n >= 2 and d >= 2");
  Code code = [&] {
    if (n <= 3) return ghz_code(n, d);
    if (n == 6 && d == 4) return rs_code(4, 3, RsExtension::double_);
    auto pp = prime_power_decompose(d);
    if (pp && d >= 3 && n <= d + 1) {
      Code c = rs_code(d, n / 2, RsExtension::single);
      while (c.n > n) c = puncture(c, c.n - 1);
      return c;
    }
    if (n == 4 && d == 6)
      throw Error("not-constructible",
                  "no minimal-support AME(4,6) state exists (see `search "
                  "ame-exists --n 4 --d 6`)");
    throw Error("not-constructible",
                "this toolkit has no construction at these parameters");
  }();
  AmeState state = state_from_code(code);
  AmeVerdict comb = verify_ame_combinatorial(state);
  if (!comb.is_ame)
    throw Error("internal", "constructed state fails the combinatorial "
                            "checker");
  auto dm = checked_pow(d, n / 2);
  if (dm && *dm <= 4096) {
    AmeVerdict oracle = verify_ame_partial_trace(state);
    if (!oracle.is_ame)
      throw Error("internal",
                  "constructed state fails the partial-trace oracle");
  }
  return state;
}

AmeExistsResult ame_minimal_exists(int n, int d, int workers) {
  if (n < 2 || d < 2)
    throw Error("invalid-params", "need n >= 2 and d >= 2");
  AmeExistsResult result;
  result.n = n;
  result.d = d;

  bool constructible =
      n <= 3 || (n == 6 && d == 4) ||
      (prime_power_decompose(d).has_value() && d >= 3 && n <= d + 1);
  if (constructible) {
    result.state = construct_ame_state(n, d);
    result.verdict = "yes";
    result.method = "construction";
    result.detail =
        "constructed a minimal-support AME state with " +
        std::to_string(result.state->kets.size()) +
        " kets; verified by the combinatorial checker" +
        (checked_pow(d, n / 2).value_or(LLONG_MAX) <= 4096
             ? " and the exact partial-trace oracle"
             : "");
    return result;
  }

  if (n == 4 && d == 6) {
    SearchCertificate cert = orthogonal_pair_exists(6, workers);
    result.search_certificate = cert;
    if (cert.verdict == "not-exists") {
      result.verdict = "no";
      result.method = "search";
      result.detail =
          "exhausted all " + std::to_string(cert.squares_examined) +
          " reduced latin squares of order 6; none has an orthogonal mate, "
          "so no pair of orthogonal latin squares of order 6 and hence no "
          "minimal-support AME(4,6) state exists";
    } else {
      // Unreachable by Tarry's theorem; kept sound in case it ever fires.
      Code code = hypercubes_to_code(HypercubeSet::make(
          2, 6, {cert.witness->first, cert.witness->second}));
      result.state = state_from_code(code);
      result.verdict = "yes";
      result.method = "search";
      result.detail = "orthogonal pair found";
    }
    return result;
  }

  BoundReport report = n_report(d, builtin_external_facts(), workers);
  result.bounds_report = report;
  result.method = "bounds";
  if (report.lower && n <= report.lower->value) {
    result.verdict = "yes";
    result.detail = "n <= N(d) lower bound " +
                    std::to_string(report.lower->value) + " (" +
                    report.lower->subject() + " " +
                    relation_symbol(report.lower->relation) + " " +
                    std::to_string(report.lower->value) + ")";
  } else if (report.upper && n > report.upper->value) {
    result.verdict = "no";
    result.detail = "n exceeds the N(d) upper bound " +
                    std::to_string(report.upper->value);
  } else {
    result.verdict = "unknown";
    result.detail =
        "no construction, search, or shipped bound decides these parameters";
  }
  return result;
}

}  // namespace ame
