// Generator matrices X_1, ..., X_n in M_d(L_n) for gcd(d, n - 1) = 1.
//
// The templates fix every entry except the slots in the last column of
// X_{q+2}, ..., X_n.  Those slots are filled by a bijection with the list
// x_1^{d-1}, x_j x_1^t (2 <= j <= n, 0 <= t <= d - 2), found by a
// deterministic search.  Each candidate must satisfy the defining relations
// of L_n, and generation of M_d(L_n) is certified by exhibiting every matrix
// unit and every x_k e_11 as an explicit (exactly verified) combination of
// images of monomials.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <optional>
#include <string>

#include "htg/error.hpp"
#include "htg/iso.hpp"

namespace htg {

  std::pair<std::size_t, std::size_t> template_parameters(std::size_t d,
                                                          std::size_t n) {
    validate_parameters(n, 1);
    if (d < 2 || d >= n) {
      throw InvalidArgument("templates need 2 <= d < n, found d = "
                            + std::to_string(d) + ", n = " + std::to_string(n));
    }
    if (std::gcd(d, n - 1) != 1) {
      throw InvalidArgument("gcd(d, n - 1) = gcd(" + std::to_string(d) + ", "
                            + std::to_string(n - 1)
                            + ") != 1, so L_n and M_d(L_n) are not isomorphic");
    }
    auto rho = n % d;
    if (rho == 0) {
      rho = d;
    }
    auto const q = (n - rho) / d;
    // rho = 1 would mean d divides n - 1
    if (rho < 2 || q < 1) {
      throw InvalidArgument("no decomposition n = q d + rho with q >= 1 and 2 <= rho <= d");
    }
    return {q, rho};
  }

  std::vector<Slot> template_slots(std::size_t d, std::size_t n) {
    auto const [q, rho] = template_parameters(d, n);
    std::vector<Slot> slots;
    for (std::size_t row = rho - 1; row <= d; ++row) {
      slots.push_back(Slot{q + 2, row});
    }
    for (std::size_t i = q + 3; i <= n; ++i) {
      for (std::size_t row = 1; row <= d; ++row) {
        slots.push_back(Slot{i, row});
      }
    }
    return slots;
  }

  std::vector<word_type> the_list(std::size_t d, std::size_t n) {
    std::vector<word_type> list;
    list.emplace_back(d - 1, 1);
    for (std::size_t t = d - 1; t-- > 0;) {
      for (std::size_t j = 2; j <= n; ++j) {
        word_type w(t, 1);
        w.push_back(static_cast<letter_type>(j));
        list.push_back(std::move(w));
      }
    }
    return list;
  }

  namespace {
    PForm x_word(word_type const& k) {
      return PForm{{Monomial{{}, k}}};
    }

    PForm one() {
      return PForm{{unit_monomial()}};
    }

    LMatrix zero_matrix(std::size_t n, std::size_t d) {
      return LMatrix(n, d, d);
    }
  }  // namespace

  std::vector<LMatrix> instantiate_templates(std::size_t                     d,
                                             std::size_t                     n,
                                             std::vector<std::size_t> const& perm) {
    auto const [q, rho] = template_parameters(d, n);
    auto const slots    = template_slots(d, n);
    auto const list     = the_list(d, n);
    if (slots.size() != list.size()) {
      throw InvalidArgument("template has " + std::to_string(slots.size())
                            + " slots but the list has "
                            + std::to_string(list.size()) + " elements");
    }
    if (perm.size() != slots.size()) {
      throw InvalidArgument("assignment has the wrong length");
    }
    std::vector<LMatrix> x(n, zero_matrix(n, d));
    auto set = [&x](std::size_t i, std::size_t row, std::size_t col, PForm p) {
      x[i - 1].at(row - 1, col - 1) = std::move(p);
    };
    for (std::size_t i = 1; i <= q; ++i) {
      for (std::size_t j = 1; j <= d; ++j) {
        set(i, j, 1, x_word({static_cast<letter_type>((i - 1) * d + j)}));
      }
    }
    for (std::size_t t = 1; t <= rho; ++t) {
      set(q + 1, t, 1, x_word({static_cast<letter_type>(q * d + t)}));
    }
    for (std::size_t i = 1; i + rho <= d; ++i) {
      set(q + 1, i + rho, i + 1, one());
    }
    for (std::size_t j = 1; j + 2 <= rho; ++j) {
      set(q + 2, j, j + d - rho + 1, one());
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      set(slots[k].matrix, slots[k].row, d, x_word(list[perm[k]]));
    }
    return x;
  }

  bool satisfies_relations(std::vector<LMatrix> const& x) {
    if (x.empty()) {
      return false;
    }
    auto const           n = x.front().n();
    auto const           d = x.front().rows();
    std::vector<LMatrix> y;
    for (auto const& m : x) {
      y.push_back(mat_star(m));
    }
    auto is_zero = [](LMatrix const& m) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (!to_nf(m.at(i, j), m.n()).is_zero()) {
            return false;
          }
        }
      }
      return true;
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        auto const p = mat_mul(x[i], y[j]);
        if (i == j ? !is_identity(p) : !is_zero(p)) {
          return false;
        }
      }
    }
    LMatrix sum(n, d, d);
    for (std::size_t j = 0; j < x.size(); ++j) {
      sum = mat_add(sum, mat_mul(y[j], x[j]));
    }
    return is_identity(sum);
  }

  ////////////////////////////////////////////////////////////////////////
  // Merge test
  ////////////////////////////////////////////////////////////////////////

  // Reading an infinite word w placed in column c, the generators parse w as
  // K_1 K_2 ... where K_1 is the entry of some X_i in column c (row a), K_2 is
  // an entry in column a, and so on.  Generation of every e_ab needs the
  // parses started in columns a and b to coincide after a bounded number of
  // letters; generation of x_k e_11 needs the same for the parses of k w and w
  // started in column 1.  Backward, the sequence of generators read must
  // determine the starting column after a bounded number of steps.

  namespace {
    struct CodeWord {
      word_type   word;
      std::size_t next;  // 0-based row, the column the parse continues in
    };

    struct Parser {
      std::size_t column;
      word_type   pending;
      auto        operator<=>(Parser const&) const = default;
    };

    class MergeAutomaton {
     public:
      MergeAutomaton(std::vector<std::vector<CodeWord>> codes, std::size_t n)
          : _codes(std::move(codes)), _n(n) {}

      std::optional<Parser> start(std::size_t column) const {
        return settle(Parser{column, {}});
      }

      std::optional<Parser> step(Parser p, letter_type a) const {
        p.pending.push_back(a);
        bool extends = false;
        for (auto const& cw : _codes[p.column]) {
          if (cw.word == p.pending) {
            return settle(Parser{cw.next, {}});
          }
          extends = extends || is_prefix(p.pending, cw.word);
        }
        if (!extends) {
          return std::nullopt;
        }
        return p;
      }

      // True when every infinite input drives the two parsers together.
      bool merges(Parser const& u, Parser const& v) {
        _state.clear();
        return visit(u, v);
      }

     private:
      std::optional<Parser> settle(Parser p) const {
        for (std::size_t guard = 0; guard <= _codes.size(); ++guard) {
          auto const& code = _codes[p.column];
          if (!p.pending.empty() || code.size() != 1 || !code[0].word.empty()) {
            return p;
          }
          p.column = code[0].next;
        }
        return std::nullopt;
      }

      bool visit(Parser const& u, Parser const& v) {
        if (u == v) {
          return true;
        }
        auto key       = std::make_pair(u, v);
        auto [it, ins] = _state.emplace(key, 1);
        if (!ins) {
          return it->second == 2;  // on the stack means a cycle
        }
        for (std::size_t a = 1; a <= _n; ++a) {
          auto next_u = step(u, static_cast<letter_type>(a));
          auto next_v = step(v, static_cast<letter_type>(a));
          if (!next_u || !next_v || !visit(*next_u, *next_v)) {
            return false;
          }
        }
        _state[key] = 2;
        return true;
      }

      std::vector<std::vector<CodeWord>>         _codes;
      std::size_t                                _n;
      std::map<std::pair<Parser, Parser>, int>   _state;
    };

    // every composition of the column maps of a fixed length is constant
    bool synchronizing(std::vector<std::vector<std::size_t>> const& maps,
                       std::size_t                                  d) {
      std::map<std::uint64_t, int> state;
      auto visit = [&](auto&& self, std::uint64_t set) -> bool {
        if (std::popcount(set) <= 1) {
          return true;
        }
        auto [it, ins] = state.emplace(set, 1);
        if (!ins) {
          return it->second == 2;
        }
        for (auto const& f : maps) {
          std::uint64_t image = 0;
          for (std::size_t a = 0; a < d; ++a) {
            if (set >> a & 1) {
              image |= std::uint64_t(1) << f[a];
            }
          }
          if (!self(self, image)) {
            return false;
          }
        }
        state[set] = 2;
        return true;
      };
      return visit(visit, d == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << d) - 1);
    }
  }  // namespace

  bool passes_merge_test(std::vector<LMatrix> const& x) {
    if (x.empty()) {
      return false;
    }
    auto const n = x.front().n();
    auto const d = x.front().rows();
    if (d > 64) {
      throw InvalidArgument("merge test supports d <= 64");
    }
    std::vector<std::vector<CodeWord>>    codes(d);
    std::vector<std::vector<std::size_t>> maps;
    for (auto const& m : x) {
      std::vector<std::size_t> column_of(d);
      for (std::size_t a = 0; a < d; ++a) {
        std::size_t found = 0;
        for (std::size_t c = 0; c < d; ++c) {
          auto const& e = m.at(a, c);
          auto const* p = std::get_if<PForm>(&e);
          if (p == nullptr) {
            return false;
          }
          if (p->is_zero()) {
            continue;
          }
          if (p->terms.size() != 1 || !p->terms[0].y.empty()) {
            return false;
          }
          codes[c].push_back(CodeWord{p->terms[0].x, a});
          column_of[a] = c;
          ++found;
        }
        if (found != 1) {
          return false;
        }
      }
      maps.push_back(std::move(column_of));
    }
    if (!synchronizing(maps, d)) {
      return false;
    }
    MergeAutomaton automaton(std::move(codes), n);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        auto u = automaton.start(a);
        auto v = automaton.start(b);
        if (!u || !v || !automaton.merges(*u, *v)) {
          return false;
        }
      }
    }
    for (std::size_t k = 1; k <= n; ++k) {
      auto u = automaton.start(0);
      if (!u) {
        return false;
      }
      auto shifted = automaton.step(*u, static_cast<letter_type>(k));
      if (!shifted || !automaton.merges(*shifted, *u)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Span search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::uint64_t prime = (std::uint64_t(1) << 61) - 1;

    std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
      return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b)
                                        % prime);
    }

    std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) {
      return a >= b ? a - b : a + prime - b;
    }

    std::uint64_t inv_mod(std::uint64_t a) {
      std::uint64_t result = 1, base = a, e = prime - 2;
      while (e != 0) {
        if (e & 1) {
          result = mul_mod(result, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
      }
      return result;
    }

    std::uint64_t to_mod(coefficient_type const& c) {
      coefficient_type r = c % prime;
      if (r < 0) {
        r += prime;
      }
      return static_cast<std::uint64_t>(r);
    }

    // Coordinates are (newest word id, y word id, x word id, row, column),
    // packed so that the order is lexicographic in that tuple.
    using coordinate = unsigned __int128;

    struct CoordinateHash {
      std::size_t operator()(coordinate c) const noexcept {
        auto h = static_cast<std::uint64_t>(c)
                 ^ (static_cast<std::uint64_t>(c >> 64) * 0x9e3779b97f4a7c15ULL);
        h ^= h >> 31;
        h *= 0xbf58476d1ce4e5b9ULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
      }
    };

    // Sparse vector over Z/p, sorted by coordinate.
    using sparse = std::vector<std::pair<coordinate, std::uint64_t>>;
    using steps_type = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

    void canonicalize(sparse& v) {
      std::sort(v.begin(), v.end(),
                [](auto const& a, auto const& b) { return a.first < b.first; });
      std::size_t out = 0;
      for (std::size_t i = 0; i < v.size();) {
        auto const    key = v[i].first;
        std::uint64_t sum = 0;
        for (; i < v.size() && v[i].first == key; ++i) {
          sum = (sum + v[i].second) % prime;
        }
        if (sum != 0) {
          v[out++] = {key, sum};
        }
      }
      v.resize(out);
    }

    // Incremental echelon form over Z/p.  The pivot of a row is its last
    // (newest) coordinate; images of longer monomials nearly always bring a
    // new coordinate, so most insertions need no reduction and are stored
    // only by id, their vector being recomputed when needed.  Reduced rows
    // keep the steps that produced them, so combinations are only rebuilt on
    // demand.
    class Echelon {
     public:
      explicit Echelon(std::function<sparse(std::uint32_t)> source)
          : _source(std::move(source)) {}

      void insert(sparse v, std::uint32_t id, bool recomputable) {
        steps_type steps;
        reduce(v, steps);
        if (v.empty()) {
          return;
        }
        auto const inv = inv_mod(v.back().second);
        _pivot.emplace(v.back().first, static_cast<std::uint32_t>(_rows.size()));
        auto extra = none;
        if (!steps.empty() || !recomputable) {
          for (auto& [k, c] : v) {
            c = mul_mod(c, inv);
          }
          extra = static_cast<std::uint32_t>(_stored.size());
          _stored.push_back(Stored{std::move(v), std::move(steps)});
        }
        _rows.push_back(Row{id, extra, inv});
      }

      // If v is in the span, coefficients c with v = sum c_id vec_id.
      std::optional<std::map<std::uint32_t, std::uint64_t>>
      express(sparse v) const {
        steps_type steps;
        reduce(v, steps);
        if (!v.empty()) {
          return std::nullopt;
        }
        std::map<std::uint32_t, std::uint64_t> c;
        for (auto const& [r, f] : steps) {
          c[r] = (c[r] + f) % prime;
        }
        std::map<std::uint32_t, std::uint64_t> result;
        while (!c.empty()) {
          auto const [r, coeff] = *c.rbegin();
          c.erase(r);
          if (coeff == 0) {
            continue;
          }
          auto const& row = _rows[r];
          auto const  g   = mul_mod(coeff, row.inv);
          result[row.id]  = (result[row.id] + g) % prime;
          if (row.extra != none) {
            for (auto const& [k, f] : _stored[row.extra].steps) {
              c[k] = sub_mod(c[k], mul_mod(g, f));
            }
          }
        }
        std::erase_if(result, [](auto const& kv) { return kv.second == 0; });
        return result;
      }

     private:
      static constexpr std::uint32_t none = ~std::uint32_t(0);

      struct Row {
        std::uint32_t id;
        std::uint32_t extra;
        std::uint64_t inv;
      };

      struct Stored {
        sparse     v;
        steps_type steps;
      };

      sparse row_vector(Row const& row) const {
        if (row.extra != none) {
          return _stored[row.extra].v;
        }
        auto v = _source(row.id);
        for (auto& [k, c] : v) {
          c = mul_mod(c, row.inv);
        }
        return v;
      }

      // Eliminates the last coordinate while it is a pivot.
      void reduce(sparse& v, steps_type& steps) const {
        sparse scratch;
        while (!v.empty()) {
          auto const it = _pivot.find(v.back().first);
          if (it == _pivot.end()) {
            return;
          }
          auto const r   = it->second;
          auto const row = row_vector(_rows[r]);
          auto const f   = v.back().second;
          steps.emplace_back(r, f);
          scratch.clear();
          std::size_t a = 0, b = 0;
          while (a < v.size() || b < row.size()) {
            if (b == row.size() || (a < v.size() && v[a].first < row[b].first)) {
              scratch.push_back(v[a++]);
            } else {
              auto const c = sub_mod(
                  a < v.size() && v[a].first == row[b].first ? v[a++].second : 0,
                  mul_mod(f, row[b].second));
              if (c != 0) {
                scratch.emplace_back(row[b].first, c);
              }
              ++b;
            }
          }
          v.swap(scratch);
        }
      }

      std::function<sparse(std::uint32_t)>                           _source;
      std::vector<Row>                                               _rows;
      std::vector<Stored>                                            _stored;
      std::unordered_map<coordinate, std::uint32_t, CoordinateHash> _pivot;
    };

    // Row k of a matrix with at most one nonzero entry x_K per row.
    struct RowEntry {
      std::size_t col;
      word_type   word;
    };
    using RowMap = std::vector<std::optional<RowEntry>>;

    std::optional<RowMap> row_map(LMatrix const& a) {
      RowMap result(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          auto const e = to_nf(a.at(i, j), a.n());
          if (e.is_zero()) {
            continue;
          }
          if (result[i] || e.terms().size() != 1) {
            return std::nullopt;
          }
          auto const& [m, c] = *e.terms().begin();
          if (c != 1 || !m.y.empty()) {
            return std::nullopt;
          }
          result[i] = RowEntry{j, m.x};
        }
      }
      return result;
    }

    // Words numbered in order of first appearance.
    class WordTrie {
     public:
      explicit WordTrie(std::size_t n) : _n(n), _child(n, 0), _parent(1, 0), _letter(1, 0) {}

      std::uint32_t id(word_type const& w) {
        std::uint32_t node = 0;
        for (auto a : w) {
          auto const slot = node * _n + (a - 1);
          if (_child[slot] == 0) {
            _child[slot] = static_cast<std::uint32_t>(_parent.size());
            _child.resize(_child.size() + _n, 0);
            _parent.push_back(node);
            _letter.push_back(a);
          }
          node = _child[slot];
        }
        return node;
      }

      word_type word(std::uint32_t node) const {
        word_type w;
        for (; node != 0; node = _parent[node]) {
          w.push_back(_letter[node]);
        }
        std::reverse(w.begin(), w.end());
        return w;
      }

     private:
      std::size_t                _n;
      std::vector<std::uint32_t> _child;
      std::vector<std::uint32_t> _parent;
      std::vector<letter_type>   _letter;
    };

    class SpanSearch {
     public:
      explicit SpanSearch(std::vector<LMatrix> const& x)
          : _x(x),
            _n(x.front().n()),
            _d(x.front().rows()),
            _words(_n),
            _echelon([this](std::uint32_t id) { return fast_vector(generator(id)); }) {
        for (auto const& m : x) {
          _y.push_back(mat_star(m));
          if (auto r = row_map(m)) {
            _rows.push_back(std::move(*r));
          }
        }
        if (_rows.size() != x.size()) {
          _rows.clear();
        }
      }

      LMatrix image(Monomial const& m) const {
        LMatrix result = LMatrix::identity(_n, _d);
        for (auto i : m.y) {
          result = mat_mul(result, _y[i - 1]);
        }
        for (auto it = m.x.rbegin(); it != m.x.rend(); ++it) {
          result = mat_mul(result, _x[*it - 1]);
        }
        return result;
      }

      sparse to_vector(LMatrix const& a) {
        sparse v;
        for (std::size_t i = 0; i < _d; ++i) {
          for (std::size_t j = 0; j < _d; ++j) {
            auto const entry = to_nf(a.at(i, j), _n);
            for (auto const& [m, c] : entry.terms()) {
              if (auto const r = to_mod(c); r != 0) {
                v.emplace_back(intern(i, j, m.y, m.x), r);
              }
            }
          }
        }
        canonicalize(v);
        return v;
      }

      void add(Monomial const& m) {
        auto const id = static_cast<std::uint32_t>(_generators.size());
        _generators.emplace_back(_words.id(m.y), _words.id(m.x));
        if (_rows.empty()) {
          _echelon.insert(to_vector(image(m)), id, false);
        } else {
          _echelon.insert(fast_vector(m), id, true);
        }
      }

      // An exactly verified preimage of target, if one is in the span.
      bool certify(LMatrix const& target) {
        auto comb = _echelon.express(to_vector(target));
        if (!comb) {
          return false;
        }
        LMatrix sum = LMatrix(_n, _d, _d).nf();
        for (auto const& [id, c] : *comb) {
          coefficient_type value = c > prime / 2
                                       ? coefficient_type(c) - coefficient_type(prime)
                                       : coefficient_type(c);
          auto const im = image(generator(id)).nf();
          for (std::size_t i = 0; i < _d; ++i) {
            for (std::size_t j = 0; j < _d; ++j) {
              auto const& e = std::get<AlgebraElement>(im.at(i, j));
              std::vector<std::pair<Monomial, coefficient_type>> terms;
              for (auto const& [mono, k] : e.terms()) {
                terms.emplace_back(mono, k * value);
              }
              std::get<AlgebraElement>(sum.at(i, j)) += normalize(_n, terms);
            }
          }
        }
        return equals(sum, target);
      }

     private:
      Monomial generator(std::uint32_t id) const {
        auto const& [y, x] = _generators[id];
        return Monomial{_words.word(y), _words.word(x)};
      }

      // Rows of X_{w_m} ... X_{w_1} for the multiindex w.
      RowMap product(word_type const& w) const {
        RowMap result(_d);
        for (std::size_t i = 0; i < _d; ++i) {
          result[i] = RowEntry{i, {}};
        }
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          auto const& factor = _rows[*it - 1];
          for (auto& entry : result) {
            if (!entry) {
              continue;
            }
            auto const& next = factor[entry->col];
            if (!next) {
              entry.reset();
              continue;
            }
            // x_W x_K = x_{K W}
            entry->word.insert(entry->word.begin(), next->word.begin(), next->word.end());
            entry->col = next->col;
          }
        }
        return result;
      }

      // Appends the normal form of sign * y_U x_V at entry (i, j).
      void emit(sparse& v, std::size_t i, std::size_t j, word_type& u, word_type& w,
                std::uint64_t sign) {
        if (u.empty() || w.empty() || u.back() != _n || w.back() != _n) {
          v.emplace_back(intern(i, j, u, w), sign);
          return;
        }
        u.pop_back();
        w.pop_back();
        emit(v, i, j, u, w, sign);
        auto const negated = sub_mod(0, sign);
        for (std::size_t k = 1; k < _n; ++k) {
          u.push_back(static_cast<letter_type>(k));
          w.push_back(static_cast<letter_type>(k));
          v.emplace_back(intern(i, j, u, w), negated);
          u.pop_back();
          w.pop_back();
        }
        u.push_back(static_cast<letter_type>(_n));
        w.push_back(static_cast<letter_type>(_n));
      }

      // Image of y_I x_J = (X_I)^* X_J, computed on row maps.
      sparse fast_vector(Monomial const& m) {
        auto const left  = product(m.y);
        auto const right = product(m.x);
        sparse     v;
        for (std::size_t c = 0; c < _d; ++c) {
          if (!left[c] || !right[c]) {
            continue;
          }
          auto u = left[c]->word;
          auto w = right[c]->word;
          emit(v, left[c]->col, right[c]->col, u, w, 1);
        }
        canonicalize(v);
        return v;
      }

      coordinate intern(std::size_t i, std::size_t j, word_type const& u,
                        word_type const& w) {
        auto const a = _words.id(u);
        auto const b = _words.id(w);
        return (coordinate(std::max(a, b)) << 96) | (coordinate(a) << 64)
               | (coordinate(b) << 32) | coordinate((i << 16) | j);
      }

      std::vector<LMatrix> const&                          _x;
      std::vector<LMatrix>                                 _y;
      std::vector<RowMap>                                  _rows;
      std::size_t                                          _n;
      std::size_t                                          _d;
      WordTrie                                             _words;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> _generators;
      Echelon                                              _echelon;
    };

    void for_each_word(std::size_t n, std::size_t length, auto&& f) {
      word_type w(length, 1);
      while (true) {
        f(w);
        std::size_t i = length;
        while (i > 0 && w[i - 1] == n) {
          w[--i] = 1;
        }
        if (i == 0) {
          return;
        }
        ++w[i - 1];
      }
    }
  }  // namespace

  SpanResult span_check(std::vector<LMatrix> const& x, std::size_t bound) {
    if (x.empty()) {
      throw InvalidArgument("span_check: no generators");
    }
    auto const           n = x.front().n();
    auto const           d = x.front().rows();
    std::vector<LMatrix> targets;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        LMatrix e(n, d, d);
        e.at(a, b) = PForm{{unit_monomial()}};
        targets.push_back(std::move(e));
      }
    }
    for (std::size_t k = 1; k <= n; ++k) {
      LMatrix e(n, d, d);
      e.at(0, 0) = PForm{{x_generator(k)}};
      targets.push_back(std::move(e));
    }
    std::vector<bool> found(targets.size(), false);
    std::size_t       count = 0;
    SpanSearch        search(x);
    for (std::size_t length = 0; length <= bound; ++length) {
      for (std::size_t ylen = 0; ylen <= length; ++ylen) {
        for_each_word(n, ylen, [&](word_type const& yw) {
          for_each_word(n, length - ylen, [&](word_type const& xw) {
            Monomial m{yw, xw};
            if (!is_forbidden(m, n)) {
              search.add(m);
            }
          });
        });
      }
      for (std::size_t t = 0; t < targets.size(); ++t) {
        if (!found[t] && search.certify(targets[t])) {
          found[t] = true;
          ++count;
        }
      }
      if (count == targets.size()) {
        return SpanResult{true, length, count, targets.size()};
      }
    }
    return SpanResult{false, bound, count, targets.size()};
  }

  ////////////////////////////////////////////////////////////////////////
  // build_generators
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string describe(std::vector<Slot> const&       slots,
                         std::vector<word_type> const&  list,
                         std::vector<std::size_t> const& perm) {
      std::string out;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (k != 0) {
          out += ", ";
        }
        out += "a[" + std::to_string(slots[k].matrix) + ","
               + std::to_string(slots[k].row)
               + "]=" + to_string(Monomial{{}, list[perm[k]]});
      }
      return out;
    }

    GeneratorSet trivial_set(std::size_t n) {
      GeneratorSet g{n, 1, 1, 0, 0, {}, {}, {}, GenerationStatus::verified, 0, {}};
      for (std::size_t i = 1; i <= n; ++i) {
        LMatrix m(n, 1, 1);
        m.at(0, 0) = PForm{{x_generator(i)}};
        g.Y.push_back(mat_star(m));
        g.X.push_back(std::move(m));
      }
      g.transcript.push_back("d = 1: X_i = [x_i]");
      return g;
    }
  }  // namespace

  GeneratorSet build_generators(std::size_t             d,
                                std::size_t             n,
                                GeneratorOptions const& options) {
    validate_parameters(n, 1);
    if (d < 1) {
      throw InvalidArgument("d must be positive");
    }
    if (std::gcd(d, n - 1) != 1) {
      throw InvalidArgument("gcd(d, n - 1) = gcd(" + std::to_string(d) + ", "
                            + std::to_string(n - 1)
                            + ") != 1, so L_n and M_d(L_n) are not isomorphic");
    }
    auto const base_d = (d - 1) % (n - 1) + 1;
    GeneratorSet result = base_d == 1 ? trivial_set(n) : GeneratorSet{};
    if (base_d > 1) {
      auto const [q, rho] = template_parameters(base_d, n);
      auto const slots    = template_slots(base_d, n);
      auto const list     = the_list(base_d, n);
      if (slots.size() != list.size()) {
        throw InvalidArgument("template slot count " + std::to_string(slots.size())
                              + " differs from list size "
                              + std::to_string(list.size()));
      }
      std::vector<std::string> transcript;
      transcript.push_back("d = " + std::to_string(base_d) + ", n = "
                           + std::to_string(n) + ": q = " + std::to_string(q)
                           + ", rho = " + std::to_string(rho) + ", "
                           + std::to_string(slots.size()) + " slots");

      // Backtracking over bijections list -> slots in lexicographic order.
      // A partial assignment is pruned as soon as two words sharing the last
      // column are prefix-comparable, which would break X_i Y_j = delta_ij I.
      std::vector<std::size_t>            perm;
      std::vector<bool>                   used(list.size(), false);
      std::size_t                         examined = 0;
      std::optional<std::vector<std::size_t>> fallback;
      std::optional<GeneratorSet>         success;
      auto make_set = [&](std::vector<std::size_t> const& p,
                          std::vector<LMatrix>            x,
                          GenerationStatus                status,
                          std::size_t                     length) {
        GeneratorSet g{n, base_d, base_d, q, rho, {}, {}, {}, status, length, {}};
        for (std::size_t k = 0; k < slots.size(); ++k) {
          g.assignment.emplace_back(slots[k], list[p[k]]);
        }
        for (auto const& m : x) {
          g.Y.push_back(mat_star(m));
        }
        g.X = std::move(x);
        return g;
      };
      auto search = [&](auto&& self) -> bool {
        if (perm.size() == list.size()) {
          ++examined;
          auto x = instantiate_templates(base_d, n, perm);
          if (options.prefilter && !passes_merge_test(x)) {
            if (!fallback && satisfies_relations(x)) {
              fallback = perm;
            }
            return examined >= options.budget;
          }
          if (!satisfies_relations(x)) {
            transcript.push_back("#" + std::to_string(examined)
                                 + " relations fail");
            return examined >= options.budget;
          }
          auto const span = span_check(x, options.span_bound);
          transcript.push_back(
              "#" + std::to_string(examined) + " " + describe(slots, list, perm)
              + ": relations hold, " + std::to_string(span.witnesses_found) + "/"
              + std::to_string(span.witnesses_total) + " witnesses at length <= "
              + std::to_string(span.length));
          if (span.complete) {
            success = make_set(perm, std::move(x), GenerationStatus::verified,
                               span.length);
            return true;
          }
          if (!fallback) {
            fallback = perm;
          }
          return examined >= options.budget;
        }
        for (std::size_t e = 0; e < list.size(); ++e) {
          if (used[e]) {
            continue;
          }
          bool clash = false;
          for (auto const p : perm) {
            if (is_prefix(list[p], list[e]) || is_prefix(list[e], list[p])) {
              clash = true;
              break;
            }
          }
          if (clash) {
            continue;
          }
          used[e] = true;
          perm.push_back(e);
          bool const stop = self(self);
          perm.pop_back();
          used[e] = false;
          if (stop) {
            return true;
          }
        }
        return false;
      };
      search(search);
      if (success) {
        result = std::move(*success);
      } else if (fallback) {
        transcript.push_back("no assignment certified within the budget; "
                             "generation unverified");
        result = make_set(*fallback, instantiate_templates(base_d, n, *fallback),
                          GenerationStatus::unverified, options.span_bound);
      } else {
        throw SearchExhausted("no assignment satisfying the relations among "
                              + std::to_string(examined) + " examined");
      }
      transcript.push_back("examined " + std::to_string(examined)
                           + " assignments");
      result.transcript = std::move(transcript);
    }
    // d = base_d + k (n - 1): compose with k shift isomorphisms
    while (result.d < d) {
      for (auto& m : result.X) {
        m = shift_up(m);
      }
      for (auto& m : result.Y) {
        m = shift_up(m);
      }
      result.d += n - 1;
      result.transcript.push_back("shifted generators to d = "
                                  + std::to_string(result.d));
    }
    return result;
  }

}  // namespace htg
