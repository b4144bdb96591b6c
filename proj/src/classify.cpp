#include "braces/classify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace braces {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

int perm_order(const Perm& f) {
  const Perm id = identity_perm(static_cast<int>(f.size()));
  Perm g = f;
  int k = 1;
  while (g != id) {
    g = compose_perm(f, g);
    ++k;
  }
  return k;
}

int fixed_points(const Perm& f) {
  int c = 0;
  for (std::size_t i = 0; i < f.size(); ++i) c += f[i] == static_cast<int>(i);
  return c;
}

std::vector<std::array<int, 4>> per_element_stats(const Brace& B) {
  const auto ord = multiplicative_orders(B);
  std::vector<std::array<int, 4>> s(static_cast<std::size_t>(B.order()));
  for (int a = 0; a < B.order(); ++a)
    s[static_cast<std::size_t>(a)] = {B.additive().element_order(a), ord[static_cast<std::size_t>(a)],
                                      perm_order(B.lambda(a)), fixed_points(B.lambda(a))};
  return s;
}

/// Elements generating (B, .), chosen greedily by index.
std::vector<int> multiplicative_generators(const Brace& B) {
  const int n = B.order();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  in[0] = 1;
  std::vector<int> members{0}, gens;
  for (int g = 1; g < n && static_cast<int>(members.size()) < n; ++g) {
    if (in[static_cast<std::size_t>(g)]) continue;
    gens.push_back(g);
    // closure under right multiplication by generators
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int h : gens) {
        const int x = B.mul(members[i], h);
        if (!in[static_cast<std::size_t>(x)]) {
          in[static_cast<std::size_t>(x)] = 1;
          members.push_back(x);
        }
      }
    // earlier members times the new generator
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int x = B.mul(members[i], g);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = 1;
        members.push_back(x);
      }
    }
  }
  return gens;
}

}  // namespace

std::string Fingerprint::summary() const {
  std::ostringstream os;
  os << "socle " << socle_order << ", (B,.) = " << mult_group;
  std::map<int, int> mo;
  for (const auto& s : element_stats) ++mo[s[1]];
  os << ", mult orders {";
  bool first = true;
  for (auto [k, v] : mo) {
    os << (first ? "" : ", ") << k << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

Fingerprint fingerprint(const Brace& B) {
  Fingerprint f;
  f.socle_order = socle(B).order;
  f.mult_group = mult_group_name(B).to_string();
  f.element_stats = per_element_stats(B);
  std::sort(f.element_stats.begin(), f.element_stats.end());
  return f;
}

bool is_isomorphism(const Brace& B1, const Brace& B2, const Perm& F) {
  if (!(B1.additive() == B2.additive())) return false;
  const AbelianGroup& A = B1.additive();
  const int n = A.order();
  if (static_cast<int>(F.size()) != n || F[0] != 0) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x : F) {
    if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = 1;
  }
  auto f = [&](int a) { return F[static_cast<std::size_t>(a)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f(A.add(a, b)) != A.add(f(a), f(b)) || f(B1.mul(a, b)) != B2.mul(f(a), f(b))) return false;
  return true;
}

std::optional<IsoWitness> are_isomorphic(const Brace& B1, const Brace& B2) {
  if (!(B1.additive() == B2.additive())) return std::nullopt;
  if (B1.table() == B2.table()) {
    const Automorphism id = Automorphism::identity(B1.additive());
    return IsoWitness{id, id.as_permutation(B1.additive())};
  }
  if (!(fingerprint(B1) == fingerprint(B2))) return std::nullopt;

  const AbelianGroup& A = B1.additive();
  const auto s1 = per_element_stats(B1), s2 = per_element_stats(B2);
  const std::vector<int> basis = A.basis();
  const std::vector<int> gens = multiplicative_generators(B1);

  std::optional<IsoWitness> found;
  for_each_automorphism(A, [&](const Automorphism& F) {
    std::vector<int> img(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      img[i] = F.apply_index(A, basis[i]);
      if (s1[static_cast<std::size_t>(basis[i])] != s2[static_cast<std::size_t>(img[i])]) return true;
    }
    const Perm perm = F.as_permutation(A);
    auto f = [&](int a) { return perm[static_cast<std::size_t>(a)]; };
    // F lambda_x = lambda'_{F x} F on the additive basis, x over multiplicative generators;
    // this already forces F(x.y) = F(x).F(y) for all x, y
    for (int x : gens) {
      if (s1[static_cast<std::size_t>(x)] != s2[static_cast<std::size_t>(f(x))]) return true;
      const Perm& l1 = B1.lambda(x);
      const Perm& l2 = B2.lambda(f(x));
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (f(l1[static_cast<std::size_t>(basis[i])]) != l2[static_cast<std::size_t>(img[i])]) return true;
    }
    if (!is_isomorphism(B1, B2, perm)) return true;
    found = IsoWitness{F, perm};
    return false;
  });
  return found;
}

ClassificationReport classify(const std::vector<std::pair<std::string, Brace>>& braces) {
  std::vector<std::size_t> order(braces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return braces[a].first < braces[b].first; });

  ClassificationReport r;
  std::vector<std::size_t> rep_index;
  for (std::size_t i : order) {
    const auto& [id, B] = braces[i];
    const Fingerprint fp = fingerprint(B);
    r.fingerprints[id] = fp;
    bool placed = false;
    for (std::size_t c = 0; c < rep_index.size() && !placed; ++c) {
      const auto& rep = braces[rep_index[c]];
      if (!(rep.second.additive() == B.additive()) || !(r.fingerprints[rep.first] == fp)) continue;
      if (are_isomorphic(rep.second, B)) {
        r.classes[c].push_back(id);
        placed = true;
      }
    }
    if (!placed) {
      rep_index.push_back(i);
      r.classes.push_back({id});
      r.representatives.push_back(id);
    }
  }
  return r;
}

ClassificationReport classify_catalog(int p, int max_prime) {
  std::vector<std::pair<std::string, Brace>> v;
  for (auto& cb : catalog_p3(p, max_prime)) v.emplace_back(cb.entry.id, std::move(cb.brace));
  return classify(v);
}

// ============================================================ enumeration

namespace {

struct PermHash {
  std::size_t operator()(const Perm& v) const noexcept { return VecHash{}(v); }
};

/// Read-only data shared by all search workers.
struct Holomorph {
  const AbelianGroup& A;
  int n = 0;
  std::vector<Perm> aut;
  std::vector<Perm> aut_inv;
  std::unordered_map<Perm, int, PermHash> aut_id;
  std::vector<int> pel;        // aut ids of p-power order
  std::vector<int> pidx;       // aut id -> position in pel, or -1
  std::vector<int> comp;       // |P| x |P| -> P position of f o g, or -1
  std::vector<int> act;        // |P| x n
  std::vector<int> conj_table;  // |Aut| x |P| -> P position of F f F^-1 (if small enough)
  int id_p = 0;

  explicit Holomorph(const AbelianGroup& G) : A(G), n(G.order()) {
    for (const Automorphism& f : automorphism_group(A)) {
      aut_id.emplace(f.as_permutation(A), static_cast<int>(aut.size()));
      aut.push_back(f.as_permutation(A));
      aut_inv.push_back(inverse_perm(aut.back()));
    }
    pidx.assign(aut.size(), -1);
    for (std::size_t i = 0; i < aut.size(); ++i) {
      int o = perm_order(aut[i]);
      while (o % A.p() == 0) o /= A.p();
      if (o == 1) {
        pidx[i] = static_cast<int>(pel.size());
        pel.push_back(static_cast<int>(i));
      }
    }
    const std::size_t P = pel.size();
    comp.assign(P * P, -1);
    for (std::size_t i = 0; i < P; ++i)
      for (std::size_t j = 0; j < P; ++j)
        comp[i * P + j] = pidx[static_cast<std::size_t>(aut_id.at(compose_perm(aut[static_cast<std::size_t>(pel[i])], aut[static_cast<std::size_t>(pel[j])])))];
    act.resize(P * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < P; ++i)
      for (int b = 0; b < n; ++b) act[i * n + b] = aut[static_cast<std::size_t>(pel[i])][static_cast<std::size_t>(b)];
    id_p = pidx[static_cast<std::size_t>(aut_id.at(identity_perm(n)))];
    if (aut.size() * P <= 20'000'000) {
      conj_table.resize(aut.size() * P);
      for (std::size_t F = 0; F < aut.size(); ++F)
        for (std::size_t f = 0; f < P; ++f) conj_table[F * P + f] = conj_slow(static_cast<int>(F), static_cast<int>(f));
    }
  }

  int conj_slow(int F, int f) const {
    const Perm g = compose_perm(compose_perm(aut[static_cast<std::size_t>(F)], aut[static_cast<std::size_t>(pel[static_cast<std::size_t>(f)])]),
                                aut_inv[static_cast<std::size_t>(F)]);
    return pidx[static_cast<std::size_t>(aut_id.at(g))];
  }
  int conj(int F, int f) const {
    if (!conj_table.empty()) return conj_table[static_cast<std::size_t>(F) * pel.size() + static_cast<std::size_t>(f)];
    return conj_slow(F, f);
  }

  /// table[a] = P position of lambda_a; image under F: new[F a] = F lambda_a F^-1
  std::vector<int> transform(int F, const std::vector<int>& table) const {
    std::vector<int> out(table.size());
    const Perm& f = aut[static_cast<std::size_t>(F)];
    for (int a = 0; a < n; ++a) out[static_cast<std::size_t>(f[static_cast<std::size_t>(a)])] = conj(F, table[static_cast<std::size_t>(a)]);
    return out;
  }
};

struct Search {
  const Holomorph& H;
  bool trivial_socle;
  std::uint64_t max_nodes;
  std::atomic<std::uint64_t>& nodes;
  std::vector<int> tw;        // translation -> P position, -1 unassigned
  std::vector<int> owner;     // P position -> translation (trivial_socle mode)
  std::vector<int> members;   // translations in S, in insertion order
  std::vector<std::vector<int>> found;
  bool aborted = false;

  Search(const Holomorph& h, bool ts, std::uint64_t mx, std::atomic<std::uint64_t>& counter)
      : H(h), trivial_socle(ts), max_nodes(mx), nodes(counter) {
    tw.assign(static_cast<std::size_t>(H.n), -1);
    owner.assign(H.pel.size(), -1);
  }

  bool assign(int t, int f) {
    int& cur = tw[static_cast<std::size_t>(t)];
    if (cur >= 0) return cur == f;
    if (trivial_socle) {
      if (owner[static_cast<std::size_t>(f)] >= 0) return false;
      owner[static_cast<std::size_t>(f)] = t;
    }
    cur = f;
    members.push_back(t);
    return true;
  }

  void undo(std::size_t mark) {
    while (members.size() > mark) {
      const int t = members.back();
      members.pop_back();
      if (trivial_socle) owner[static_cast<std::size_t>(tw[static_cast<std::size_t>(t)])] = -1;
      tw[static_cast<std::size_t>(t)] = -1;
    }
  }

  bool product(int x, int y) {
    const int fx = tw[static_cast<std::size_t>(x)], fy = tw[static_cast<std::size_t>(y)];
    const int g = H.comp[static_cast<std::size_t>(fx) * H.pel.size() + static_cast<std::size_t>(fy)];
    if (g < 0) return false;
    const int t = H.A.add(x, H.act[static_cast<std::size_t>(fx) * H.n + y]);
    return assign(t, g);
  }

  /// Closes members[0..) given that members[0..done) are already closed.
  bool close(std::size_t done) {
    for (std::size_t k = done; k < members.size(); ++k) {
      const int x = members[k];
      for (std::size_t j = 0; j <= k; ++j) {
        const int y = members[j];
        if (!product(x, y) || !product(y, x)) return false;
      }
    }
    return true;
  }

  bool try_add(int t, int f) {
    if (max_nodes && nodes.fetch_add(1, std::memory_order_relaxed) >= max_nodes) {
      aborted = true;
      return false;
    }
    if (max_nodes == 0) nodes.fetch_add(1, std::memory_order_relaxed);
    const std::size_t mark = members.size();
    if (assign(t, f) && close(mark)) return true;
    undo(mark);
    return false;
  }

  void dfs() {
    if (aborted) return;
    if (static_cast<int>(members.size()) == H.n) {
      found.push_back(tw);
      return;
    }
    int t = 0;
    while (tw[static_cast<std::size_t>(t)] >= 0) ++t;
    for (std::size_t f = 0; f < H.pel.size() && !aborted; ++f) {
      const std::size_t mark = members.size();
      if (try_add(t, static_cast<int>(f))) {
        dfs();
        undo(mark);
      }
    }
  }
};

std::string table_line(const Holomorph& H, const std::vector<int>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? " " : "") + std::to_string(H.pel[static_cast<std::size_t>(t[i])]);
  return s;
}

std::vector<int> parse_table_line(const Holomorph& H, std::istringstream& in) {
  std::vector<int> t;
  int aut_id = 0;
  while (in >> aut_id) {
    if (aut_id < 0 || static_cast<std::size_t>(aut_id) >= H.aut.size() || H.pidx[static_cast<std::size_t>(aut_id)] < 0)
      throw EnumerationError("checkpoint: bad automorphism id " + std::to_string(aut_id));
    t.push_back(H.pidx[static_cast<std::size_t>(aut_id)]);
  }
  if (static_cast<int>(t.size()) != H.n) throw EnumerationError("checkpoint: table of wrong length");
  return t;
}

constexpr const char* kCheckpointVersion = "braces-enumeration 1";

std::string mode_string(const EnumerateOptions& o) {
  return std::string(o.up_to_iso ? "up-to-iso" : "all") + (o.trivial_socle_only ? " trivial-socle" : "");
}

}  // namespace

EnumerationResult enumerate_braces(const AbelianGroup& A, const EnumerateOptions& opts) {
  EnumerationResult res;
  const int n = A.order();
  if (n == 1) {
    res.braces.push_back(Brace::trivial(A));
    res.solutions = 1;
    return res;
  }
  const Holomorph H(A);

  // seed translation: first element of maximal additive order
  int t0 = 1;
  for (int a = 1; a < n; ++a)
    if (A.element_order(a) > A.element_order(t0)) t0 = a;

  std::vector<int> seeds;
  if (opts.up_to_iso) {
    std::vector<int> stab;
    for (std::size_t F = 0; F < H.aut.size(); ++F)
      if (H.aut[F][static_cast<std::size_t>(t0)] == t0) stab.push_back(static_cast<int>(F));
    std::vector<char> covered(H.pel.size(), 0);
    for (std::size_t f = 0; f < H.pel.size(); ++f) {
      if (covered[f]) continue;
      seeds.push_back(static_cast<int>(f));
      for (int F : stab) covered[static_cast<std::size_t>(H.conj(F, static_cast<int>(f)))] = 1;
    }
  } else {
    for (std::size_t f = 0; f < H.pel.size(); ++f) seeds.push_back(static_cast<int>(f));
  }
  if (opts.trivial_socle_only) std::erase(seeds, H.id_p);
  res.seeds_total = seeds.size();

  // merged results
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::set<std::vector<int>> results;
  // returns the newly added result, if any
  auto record = [&](const std::vector<int>& t) -> std::optional<std::vector<int>> {
    if (!opts.up_to_iso) {
      if (!results.insert(t).second) return std::nullopt;
      return t;
    }
    if (seen.count(t)) return std::nullopt;
    std::vector<int> best = t;
    for (std::size_t F = 0; F < H.aut.size(); ++F) {
      std::vector<int> img = H.transform(static_cast<int>(F), t);
      if (img < best) best = img;
      seen.insert(std::move(img));
    }
    results.insert(best);
    return best;
  };

  // checkpoint resume
  std::set<int> done_seeds;
  const std::string header_shape = "shape " + A.shape_name();
  const std::string header_mode = "mode " + mode_string(opts);
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    if (in) {
      std::string line;
      std::vector<std::string> header;
      for (int i = 0; i < 3 && std::getline(in, line); ++i) header.push_back(line);
      if (header.size() != 3 || header[0] != std::string("# ") + kCheckpointVersion || header[1] != header_shape ||
          header[2] != header_mode)
        throw EnumerationError("checkpoint " + opts.checkpoint_path + " belongs to a different run");
      while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "seed") {
          int k = 0;
          std::string word;
          ls >> k >> word;
          if (word == "done") done_seeds.insert(k);
        } else if (kw == "class" || kw == "brace") {
          record(parse_table_line(H, ls));
        } else if (kw == "solutions") {
          std::uint64_t s = 0;
          ls >> s;
          res.solutions += s;
        }
      }
    } else {
      std::ofstream out(opts.checkpoint_path);
      if (!out) throw EnumerationError("cannot write checkpoint " + opts.checkpoint_path);
      out << "# " << kCheckpointVersion << "\n" << header_shape << "\n" << header_mode << "\n";
    }
  }

  std::atomic<std::uint64_t> nodes{0};
  const int jobs = std::max(1, opts.jobs);
  std::vector<int> todo;
  for (std::size_t k = 0; k < seeds.size(); ++k)
    if (!done_seeds.count(static_cast<int>(k))) todo.push_back(static_cast<int>(k));
  res.seeds_done = seeds.size() - todo.size();

  for (std::size_t start = 0; start < todo.size(); start += static_cast<std::size_t>(jobs)) {
    const std::size_t stop = std::min(todo.size(), start + static_cast<std::size_t>(jobs));
    std::vector<std::unique_ptr<Search>> batch;
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::make_unique<Search>(H, opts.trivial_socle_only, opts.max_nodes, nodes));
    auto run = [&](std::size_t slot) {
      Search& s = *batch[slot];
      const int f = seeds[static_cast<std::size_t>(todo[start + slot])];
      if (s.try_add(0, H.id_p) && s.try_add(t0, f)) s.dfs();
    };
    if (batch.size() == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t slot = 0; slot < batch.size(); ++slot) threads.emplace_back(run, slot);
      for (auto& th : threads) th.join();
    }

    bool aborted = false;
    std::ofstream out;
    if (!opts.checkpoint_path.empty()) out.open(opts.checkpoint_path, std::ios::app);
    for (std::size_t slot = 0; slot < batch.size(); ++slot) {
      Search& s = *batch[slot];
      if (s.aborted) {
        aborted = true;
        continue;
      }
      std::vector<std::vector<int>> fresh;
      for (const auto& t : s.found)
        if (auto added = record(t)) fresh.push_back(std::move(*added));
      res.solutions += s.found.size();
      ++res.seeds_done;
      if (out) {
        for (const auto& t : fresh) out << (opts.up_to_iso ? "class " : "brace ") << table_line(H, t) << "\n";
        out << "solutions " << s.found.size() << "\n";
        out << "seed " << todo[start + slot] << " done\n";
      }
    }
    if (aborted) {
      res.status = EnumStatus::ResourceBound;
      break;
    }
  }
  res.nodes = nodes.load();

  for (const auto& t : results) {
    std::vector<Perm> lambda(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) lambda[static_cast<std::size_t>(a)] = H.aut[static_cast<std::size_t>(H.pel[static_cast<std::size_t>(t[static_cast<std::size_t>(a)])])];
    res.braces.push_back(Brace::from_lambda(A, lambda, "oracle"));
  }
  return res;
}

// ========================================================== nonexistence

std::vector<Automorphism> sylow_subgroup(const AbelianGroup& A) {
  std::vector<Automorphism> out;
  const int p = A.p();
  if (A.kind() == ShapeKind::Elementary && A.rank() == 3) {
    for (const GLMatrix& M : sylow_Tp(p)) out.emplace_back(M);
  } else if (A.kind() == ShapeKind::Mixed) {
    for (const MixedMatrix& M : sylow_Mp(p)) out.emplace_back(M);
  } else if (A.kind() == ShapeKind::Cyclic) {
    const std::int64_t m = A.moduli()[0];
    for (std::int64_t u = 1; u < m; u += p) out.emplace_back(UnitScalar{m, u});
  } else {
    // (Z/p)^2: upper unitriangular 2x2
    for (std::int64_t a = 0; a < p; ++a) out.emplace_back(GLMatrix::from_rows(p, {{1, a}, {0, 1}}));
  }
  return out;
}

CocycleSearch search_cocycles(const AbelianGroup& A, const std::vector<Automorphism>& domain, std::vector<int> generators,
                              const std::vector<std::optional<int>>& fixed) {
  CocycleSearch r;
  r.domain = domain;
  const int n = A.order();
  const int m = static_cast<int>(domain.size());
  std::vector<Perm> perm;
  std::unordered_map<Perm, int, PermHash> where;
  for (int i = 0; i < m; ++i) {
    perm.push_back(domain[static_cast<std::size_t>(i)].as_permutation(A));
    where.emplace(perm.back(), i);
  }
  const auto id_it = where.find(identity_perm(n));
  if (id_it == where.end()) throw BraceError("cocycle domain lacks the identity");
  const int id = id_it->second;

  auto closure_size = [&](const std::vector<int>& gens) {
    std::vector<char> in(static_cast<std::size_t>(m), 0);
    std::vector<int> queue{id};
    in[static_cast<std::size_t>(id)] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int g : gens) {
        const auto it = where.find(compose_perm(perm[static_cast<std::size_t>(g)], perm[static_cast<std::size_t>(queue[i])]));
        if (it == where.end()) throw BraceError("cocycle domain is not closed under composition");
        if (!in[static_cast<std::size_t>(it->second)]) {
          in[static_cast<std::size_t>(it->second)] = 1;
          queue.push_back(it->second);
        }
      }
    return static_cast<int>(queue.size());
  };
  if (generators.empty()) {
    // smallest generating set found by trying sizes 1, 2, then greedy
    for (int a = 0; a < m && generators.empty(); ++a)
      if (closure_size({a}) == m) generators = {a};
    for (int a = 0; a < m && generators.empty(); ++a)
      for (int b = a + 1; b < m && generators.empty(); ++b)
        if (closure_size({a, b}) == m) generators = {a, b};
    for (int a = 0; a < m && generators.empty(); ++a) {
      std::vector<int> g;
      for (int b = a; b < m && closure_size(g) < m; ++b)
        if (closure_size(g) < closure_size([&] {
              auto h = g;
              h.push_back(b);
              return h;
            }()))
          g.push_back(b);
      if (closure_size(g) == m) generators = g;
    }
  } else if (closure_size(generators) != m) {
    throw BraceError("given generators do not generate the cocycle domain");
  }
  r.generators = generators;
  if (m != n) return r;  // no bijection possible

  const std::size_t k = generators.size();
  // left multiplication by each generator
  std::vector<std::vector<int>> lm(k, std::vector<int>(static_cast<std::size_t>(m)));
  for (std::size_t i = 0; i < k; ++i)
    for (int s = 0; s < m; ++s)
      lm[i][static_cast<std::size_t>(s)] = where.at(compose_perm(perm[static_cast<std::size_t>(generators[i])], perm[static_cast<std::size_t>(s)]));

  // Necessary condition from the power formula: if g has order q then
  // (1 + g + ... + g^{q-1}) pi(g) = 0 and (1 + ... + g^{q/p - 1}) pi(g) != 0.
  auto power_sum = [&](const Perm& g, int v, int count) {
    int acc = 0, term = v;
    for (int i = 0; i < count; ++i) {
      acc = A.add(acc, term);
      term = g[static_cast<std::size_t>(term)];
    }
    return acc;
  };
  std::vector<std::vector<int>> cand(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Perm& g = perm[static_cast<std::size_t>(generators[i])];
    const int q = perm_order(g);
    for (int v = 1; v < n; ++v) {
      if (i < fixed.size() && fixed[i] && *fixed[i] != v) continue;
      if (power_sum(g, v, q) != 0) continue;
      if (q > 1 && power_sum(g, v, q / A.p()) == 0) continue;
      cand[i].push_back(v);
    }
  }

  std::vector<std::size_t> pick(k, 0);
  std::vector<int> val(static_cast<std::size_t>(m));
  std::vector<int> queue;
  std::vector<char> hit(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < k; ++i)
    if (cand[i].empty()) return r;
  while (true) {
    ++r.candidates;
    std::fill(val.begin(), val.end(), -1);
    val[static_cast<std::size_t>(id)] = 0;
    queue.assign(1, id);
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      const int s = queue[qi];
      for (std::size_t i = 0; i < k && ok; ++i) {
        const int t = lm[i][static_cast<std::size_t>(s)];
        const int v = A.add(cand[i][pick[i]], perm[static_cast<std::size_t>(generators[i])][static_cast<std::size_t>(val[static_cast<std::size_t>(s)])]);
        if (val[static_cast<std::size_t>(t)] < 0) {
          val[static_cast<std::size_t>(t)] = v;
          queue.push_back(t);
        } else if (val[static_cast<std::size_t>(t)] != v) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::fill(hit.begin(), hit.end(), 0);
      for (int v : val) {
        if (hit[static_cast<std::size_t>(v)]) {
          ok = false;
          break;
        }
        hit[static_cast<std::size_t>(v)] = 1;
      }
    }
    if (ok) {
      CocycleTable c{A, domain, val};
      const VerifyReport rep = verify_cocycle(c);
      if (!rep.ok()) throw BraceError("internal: extended cocycle fails: " + rep.violation->to_string());
      r.cocycles.push_back(std::move(c));
    }
    std::size_t i = 0;
    while (i < k && ++pick[i] == cand[i].size()) pick[i++] = 0;
    if (i == k) break;
  }
  return r;
}

NonexistenceReport nonexistence_checks(int p) {
  NonexistenceReport rep;
  rep.p = p;
  for (const AbelianGroup& A : {AbelianGroup::cyclic(p, 3), AbelianGroup::mixed(p), AbelianGroup::elementary(p, 3)}) {
    NonexistenceCase c;
    c.shape = A.shape_name();
    const auto S = sylow_subgroup(A);
    c.sylow_order = S.size();
    if (static_cast<int>(S.size()) < A.order()) {
      c.method = "Sylow p-subgroup of Aut(A) has order " + std::to_string(S.size()) + " < |A|";
    } else {
      const CocycleSearch cs = search_cocycles(A, S);
      c.candidates = cs.candidates;
      c.cocycles = cs.cocycles.size();
      c.method = "bijective 1-cocycles on the Sylow p-subgroup, " + std::to_string(cs.generators.size()) + " generators";
      std::vector<std::pair<std::string, Brace>> bs;
      for (std::size_t i = 0; i < cs.cocycles.size(); ++i) bs.emplace_back("c" + std::to_string(i), brace_from_cocycle(cs.cocycles[i]));
      c.classes = classify(bs).classes.size();
    }
    rep.cases.push_back(c);
  }
  return rep;
}

}  // namespace braces
