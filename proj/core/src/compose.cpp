#include "cookiecut/compose.hpp"

#include <algorithm>
#include <map>

#include "cookiecut/bounds.hpp"
#include "cookiecut/core.hpp"
#include "cookiecut/solver_prime.hpp"
#include "cookiecut/solver_two.hpp"

namespace cookiecut {

Method method_from_name(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "two") return Method::Two;
  if (name == "two-m2") return Method::TwoM2;
  if (name == "prime") return Method::Prime;
  if (name == "pow2") return Method::Pow2;
  if (name == "product") return Method::Product;
  throw SolverError(ErrorCode::InvalidArgument, "unknown method: " + name);
}

const char* method_name(Method method) {
  switch (method) {
    case Method::Auto: return "auto";
    case Method::Two: return "two";
    case Method::TwoM2: return "two-m2";
    case Method::Prime: return "prime";
    case Method::Pow2: return "pow2";
    case Method::Product: return "product";
  }
  return "?";
}

namespace {

struct Fragment {
  int origin = 0;
  Rat lo, hi;            // origin-cookie coordinates
  FrostingVector mass;
};

using Bundle = std::vector<Fragment>;

long largest_prime_factor(long r) {
  long best = 1;
  long v = r;
  for (long d = 2; d * d <= v; ++d) {
    while (v % d == 0) {
      best = d;
      v /= d;
    }
  }
  if (v > 1) best = std::max(best, v);
  return best;
}

Board board_from_bundles(const std::vector<Bundle>& bundles, int m) {
  Board board;
  board.m = m;
  size_t total = 0;
  for (const auto& b : bundles) total += b.size();
  size_t idx = 0;
  for (size_t b = 0; b < bundles.size(); ++b) {
    for (const Fragment& f : bundles[b]) {
      Atom atom;
      atom.origin = f.origin;
      atom.lo = f.lo;
      atom.hi = f.hi;
      atom.frosting = f.mass;
      atom.board_lo = rat(static_cast<long>(idx), static_cast<long>(total));
      atom.board_hi = rat(static_cast<long>(idx) + 1, static_cast<long>(total));
      board.atoms.push_back(std::move(atom));
      board.bundle_of.push_back(static_cast<int>(b));
      ++idx;
    }
  }
  board.bundle_count = static_cast<int>(bundles.size());
  return board;
}

std::vector<std::vector<Fragment>> solve_board(const std::vector<Bundle>& bundles, int r, int m,
                                               ComposeTrace* trace);

// Stage 1 splits the bundles into b groups; stage 2 solves each group for a
// agents after appending its received pieces to an anchor bundle.
std::vector<std::vector<Fragment>> solve_product_board(const std::vector<Bundle>& bundles, int a,
                                                       int b, int m, ComposeTrace* trace) {
  const auto group_frags = solve_board(bundles, b, m, trace);

  ComposeTrace::StageRecord record;
  record.bundles_in = static_cast<int>(bundles.size());
  record.a = a;
  record.b = b;
  record.m = m;

  std::vector<std::vector<Bundle>> next_bundles(b);
  for (int g = 0; g < b; ++g) {
    // Coverage bookkeeping: a bundle belongs wholly to the group iff the
    // group's fragments tile every one of its fragments.
    std::vector<Rat> covered;
    std::vector<std::pair<size_t, size_t>> frag_index;  // (bundle, frag)
    for (size_t bi = 0; bi < bundles.size(); ++bi) {
      for (size_t fi = 0; fi < bundles[bi].size(); ++fi) {
        covered.emplace_back(0);
        frag_index.emplace_back(bi, fi);
      }
    }
    auto locate = [&](const Fragment& piece) -> size_t {
      for (size_t k = 0; k < frag_index.size(); ++k) {
        const Fragment& f = bundles[frag_index[k].first][frag_index[k].second];
        if (f.origin == piece.origin && f.lo <= piece.lo && piece.hi <= f.hi) return k;
      }
      throw SolverError(ErrorCode::InvalidArgument, "solve_product: piece outside every fragment");
    };
    std::vector<std::vector<const Fragment*>> pieces_by_bundle(bundles.size());
    for (const Fragment& piece : group_frags[g]) {
      const size_t k = locate(piece);
      covered[k] += piece.hi - piece.lo;
      pieces_by_bundle[frag_index[k].first].push_back(&piece);
    }
    std::vector<char> whole(bundles.size(), 1);
    for (size_t k = 0; k < frag_index.size(); ++k) {
      const Fragment& f = bundles[frag_index[k].first][frag_index[k].second];
      if (covered[k] != f.hi - f.lo) whole[frag_index[k].first] = 0;
    }

    std::vector<size_t> wholes;
    std::vector<Fragment> partials;
    for (size_t bi = 0; bi < bundles.size(); ++bi) {
      if (whole[bi]) {
        if (!pieces_by_bundle[bi].empty()) wholes.push_back(bi);
      } else {
        for (const Fragment* piece : pieces_by_bundle[bi]) partials.push_back(*piece);
      }
    }
    record.group_fulls.push_back(static_cast<long>(wholes.size()));

    std::sort(partials.begin(), partials.end(), [](const Fragment& x, const Fragment& y) {
      if (x.origin != y.origin) return x.origin < y.origin;
      return x.lo < y.lo;
    });

    auto& mine = next_bundles[g];
    for (size_t bi : wholes) mine.push_back(bundles[bi]);
    if (!partials.empty()) {
      if (mine.empty()) {
        mine.push_back(std::move(partials));  // piece-only bundle
      } else {
        // anchor: the whole bundle with the largest aggregate frosting
        size_t anchor = 0;
        Rat best(-1);
        for (size_t i = 0; i < mine.size(); ++i) {
          Rat agg(0);
          for (const Fragment& f : mine[i]) {
            for (const Rat& v : f.mass) agg += v;
          }
          if (agg > best) {
            best = agg;
            anchor = i;
          }
        }
        for (Fragment& piece : partials) mine[anchor].push_back(std::move(piece));
      }
    }
  }
  if (trace != nullptr) trace->stages.push_back(record);

  std::vector<std::vector<Fragment>> result(static_cast<size_t>(a) * b);
  for (int g = 0; g < b; ++g) {
    auto inner = solve_board(next_bundles[g], a, m, trace);
    for (int u = 0; u < a; ++u) result[static_cast<size_t>(g) * a + u] = std::move(inner[u]);
  }
  return result;
}

std::vector<std::vector<Fragment>> solve_board(const std::vector<Bundle>& bundles, int r, int m,
                                               ComposeTrace* trace) {
  std::vector<std::vector<Fragment>> result(r);
  if (r == 1) {
    for (const Bundle& b : bundles) {
      for (const Fragment& f : b) result[0].push_back(f);
    }
    return result;
  }
  if (is_prime(r)) {
    const Board board = board_from_bundles(bundles, m);
    PrimeOptions options;
    options.force = true;  // internal boards can exceed the user-facing envelope
    const LabeledPartition partition = solve_prime(board, r, options);
    for (const BoardPiece& piece : board_pieces(board, partition)) {
      const Atom& atom = board.atoms[piece.atom];
      Fragment f;
      f.origin = atom.origin;
      f.lo = piece.origin_lo;
      f.hi = piece.origin_hi;
      const Rat frac = (piece.board_hi - piece.board_lo) / (atom.board_hi - atom.board_lo);
      f.mass.resize(m);
      for (int j = 0; j < m; ++j) f.mass[j] = atom.frosting[j] * frac;
      result[piece.agent - 1].push_back(std::move(f));
    }
    return result;
  }
  int a, b;
  if (is_power_of_two(r)) {
    a = r / 2;
    b = 2;
  } else {
    a = static_cast<int>(largest_prime_factor(r));
    b = r / a;
  }
  return solve_product_board(bundles, a, b, m, trace);
}

std::vector<Bundle> instance_bundles(const Instance& instance) {
  std::vector<Bundle> bundles;
  for (int i = 0; i < instance.n(); ++i) {
    Fragment f;
    f.origin = i;
    f.lo = Rat(0);
    f.hi = Rat(1);
    f.mass = instance.cookies[i];
    bundles.push_back({std::move(f)});
  }
  return bundles;
}

Allocation allocation_from_fragments(const std::vector<std::vector<Fragment>>& per_agent, int n,
                                     int r) {
  std::vector<std::map<int, Rat>> per_cookie(n);
  for (int u = 0; u < r; ++u) {
    for (const Fragment& f : per_agent[u]) {
      per_cookie[f.origin][u + 1] += f.hi - f.lo;
    }
  }
  Allocation alloc;
  alloc.r = r;
  alloc.shares.resize(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [agent, frac] : per_cookie[i]) {
      if (frac > 0) alloc.shares[i].emplace_back(agent, frac);
    }
  }
  return alloc;
}

void record_pieces(ComposeTrace* trace, const std::vector<std::vector<Fragment>>& per_agent) {
  if (trace == nullptr) return;
  trace->pieces_per_agent.assign(per_agent.size(), {});
  for (size_t u = 0; u < per_agent.size(); ++u) {
    for (const Fragment& f : per_agent[u]) {
      trace->pieces_per_agent[u].push_back({f.origin, f.lo, f.hi});
    }
  }
}

Allocation trivial_allocation(const Instance& instance, int r) {
  Allocation alloc;
  alloc.r = r;
  alloc.shares.assign(instance.n(), {{1, Rat(1)}});
  return alloc;
}

}  // namespace

Allocation solve_product(const Instance& instance, int a, int b, ComposeTrace* trace) {
  if (a < 1 || b < 1) {
    throw SolverError(ErrorCode::InvalidArgument, "solve_product: need a, b >= 1");
  }
  const int r = a * b;
  Allocation empty;
  empty.r = r;
  if (instance.n() == 0) return empty;

  const auto bundles = instance_bundles(instance);
  std::vector<std::vector<Fragment>> frags;
  if (b == 1) {
    frags = solve_board(bundles, a, instance.m, trace);
  } else if (a == 1) {
    frags = solve_board(bundles, b, instance.m, trace);
  } else {
    frags = solve_product_board(bundles, a, b, instance.m, trace);
  }
  record_pieces(trace, frags);
  return allocation_from_fragments(frags, instance.n(), r);
}

Allocation solve_pow2(const Instance& instance, int r, ComposeTrace* trace) {
  if (r < 2 || !is_power_of_two(r)) {
    throw SolverError(ErrorCode::InvalidArgument, "solve_pow2: r must be a power of two >= 2");
  }
  if (r == 2) return solve_two(instance);
  Allocation empty;
  empty.r = r;
  if (instance.n() == 0) return empty;

  const int pads = static_cast<int>((r - (instance.n() + instance.m) % r) % r);
  const Instance padded = pad_empty(instance, pads);
  const auto frags = solve_board(instance_bundles(padded), r, padded.m, trace);
  record_pieces(trace, frags);
  return unpad(allocation_from_fragments(frags, padded.n(), r), instance.n());
}

SolveOutput solve_with(const Instance& instance, int r, Method method, ComposeTrace* trace,
                       bool force) {
  if (r < 1) throw SolverError(ErrorCode::InvalidArgument, "solve: need r >= 1");
  const long n = instance.n();
  const long m = instance.m;

  SolveOutput out;
  if (method == Method::Auto) {
    if (r == 1) method = Method::Auto;  // trivial case handled below
    else if (r == 2) method = Method::Two;
    else if (is_prime(r)) method = Method::Prime;
    else if (is_power_of_two(r)) method = Method::Pow2;
    else method = Method::Product;
  }
  if (r == 1) {
    out.alloc = trivial_allocation(instance, 1);
    out.resolved = Method::Auto;
    out.guarantee = n;
    return out;
  }

  switch (method) {
    case Method::Two:
      if (r != 2) throw SolverError(ErrorCode::InvalidArgument, "method two needs --children 2");
      out.alloc = solve_two(instance);
      out.guarantee = guarantee_two(n, m);
      break;
    case Method::TwoM2:
      if (r != 2) throw SolverError(ErrorCode::InvalidArgument, "method two-m2 needs --children 2");
      out.alloc = solve_two_m2(instance);
      out.guarantee = guarantee_two(n, m);
      break;
    case Method::Prime: {
      if (!is_prime(r)) throw SolverError(ErrorCode::InvalidArgument, "method prime needs prime r");
      if (n == 0) {
        out.alloc.r = r;
        out.guarantee = 0;
        break;
      }
      const Board board = layout(instance);
      PrimeOptions options;
      options.force = force;
      out.partition = solve_prime(board, r, options);
      out.alloc = to_allocation(board, *out.partition);
      out.guarantee = guarantee_main(n, m, r);
      break;
    }
    case Method::Pow2:
      out.alloc = solve_pow2(instance, r, trace);
      out.guarantee = guarantee_pow2(n, m, r);
      break;
    case Method::Product: {
      if (is_prime(r)) {
        throw SolverError(ErrorCode::InvalidArgument, "method product needs composite r");
      }
      const int a = static_cast<int>(largest_prime_factor(r));
      out.alloc = solve_product(instance, a, r / a, trace);
      out.guarantee = guarantee_main(n, m, r);
      break;
    }
    default:
      throw SolverError(ErrorCode::InvalidArgument, "unsupported method");
  }
  out.resolved = method;
  return out;
}

Allocation solve(const Instance& instance, int r) {
  return solve_with(instance, r, Method::Auto).alloc;
}

}  // namespace cookiecut
