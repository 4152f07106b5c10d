#include "gdop/sgd.hpp"

#include "gdop/expansion.hpp"
#include "gdop/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace gdop {

const Signature& gd_term_signature() {
    static const Signature sig({{"circ", Symmetry::None}, {"lie", Symmetry::Antisymmetric}},
                               false);
    return sig;
}

Rational harmonic_H(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("H(n,k) needs n,k >= 1");
    if (k > n) throw std::invalid_argument("H(n,k) needs k <= n");
    if (k == 1) return Rational(1);
    // e_{k-1}(1/1, ..., 1/(n-1)) by the column DP.
    std::vector<Rational> e(static_cast<std::size_t>(k), Rational(0));
    e[0] = 1;
    for (int d = 1; d <= n - 1; ++d) {
        Rational inv = rat(1, d);
        for (int m = std::min(k - 1, d); m >= 1; --m)
            e[static_cast<std::size_t>(m)] += inv * e[static_cast<std::size_t>(m - 1)];
    }
    return e[static_cast<std::size_t>(k - 1)];
}

Integer lyndon_count_L(int n, int k) {
    Rational L = Rational(factorial(static_cast<unsigned>(n - 1))) * harmonic_H(n, k);
    if (!is_integer(L)) throw std::logic_error("L(n,k) came out non-integral");
    return L.get_num();
}

Integer sgd_dim(int n) {
    if (n < 1) throw std::invalid_argument("n >= 1");
    Rational total = 0;
    for (int k = 1; k <= n; ++k) {
        Rational c = Rational(factorial(static_cast<unsigned>(n + k - 2))) /
                     Rational(factorial(static_cast<unsigned>(k - 1)));
        total += c * harmonic_H(n, k);
    }
    if (!is_integer(total)) throw std::logic_error("dim SGD(n) came out non-integral");
    return total.get_num();
}

namespace {

// Partitions of {0..n-1} into exactly k nonempty blocks (restricted growth).
void set_partitions(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            if (used == k) emit(block);
            return;
        }
        // Prune: remaining elements must be able to open the missing blocks.
        if (used + (n - i) < k) return;
        for (int b = 0; b < std::min(used + 1, k); ++b) {
            block[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
}

// Compositions s_0..s_{n-1} >= 0 with sum exactly D.
void compositions(int n, int D, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> s(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == n - 1) {
            s[static_cast<std::size_t>(i)] = rest;
            emit(s);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            s[static_cast<std::size_t>(i)] = v;
            rec(i + 1, rest - v);
        }
    };
    if (n == 0) return;
    rec(0, D);
}

} // namespace

Integer ls_factorization_count(int n, int k) {
    Integer count = 0;
    std::vector<DWord> letters;
    for (int i = 1; i <= n; ++i) letters.push_back(DWord{0, i});
    set_partitions(n, k, [&](const std::vector<int>& block) {
        Integer ways = 1;
        for (int b = 0; b < k; ++b) {
            std::vector<DWord> bl;
            for (int i = 0; i < n; ++i)
                if (block[static_cast<std::size_t>(i)] == b) bl.push_back(letters[static_cast<std::size_t>(i)]);
            ways *= Integer(static_cast<long>(ls_words_on(bl).size()));
        }
        count += ways;
    });
    return count;
}

std::vector<PoisMonomial> enumerate_sgd_monomials(int n) {
    if (n < 1) throw std::invalid_argument("n >= 1");
    if (n > 7) throw std::invalid_argument("degree too large for sgd enumeration (n <= 7)");
    std::vector<PoisMonomial> out;
    for (int k = 1; k <= n; ++k) {
        int D = k - 1;
        compositions(n, D, [&](const std::vector<int>& s) {
            std::vector<DWord> letters;
            for (int i = 0; i < n; ++i) letters.push_back(DWord{s[static_cast<std::size_t>(i)], i + 1});
            set_partitions(n, k, [&](const std::vector<int>& block) {
                // LS word choices per block, then the cartesian product.
                std::vector<std::vector<Word>> choices;
                for (int b = 0; b < k; ++b) {
                    std::vector<DWord> bl;
                    for (int i = 0; i < n; ++i)
                        if (block[static_cast<std::size_t>(i)] == b)
                            bl.push_back(letters[static_cast<std::size_t>(i)]);
                    choices.push_back(ls_words_on(bl));
                }
                std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
                std::function<void(int)> rec = [&](int b) {
                    if (b == k) {
                        std::vector<Word> fs;
                        for (int j = 0; j < k; ++j)
                            fs.push_back(choices[static_cast<std::size_t>(j)]
                                                [pick[static_cast<std::size_t>(j)]]);
                        out.push_back(pois_monomial(std::move(fs)));
                        return;
                    }
                    for (std::size_t c = 0; c < choices[static_cast<std::size_t>(b)].size(); ++c) {
                        pick[static_cast<std::size_t>(b)] = c;
                        rec(b + 1);
                    }
                };
                rec(0);
            });
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ComMonomial> enumerate_gd_dual_monomials(int n) {
    if (n < 1) throw std::invalid_argument("n >= 1");
    std::vector<ComMonomial> out;
    for (int D = 0; D <= n - 1; ++D) {
        compositions(n, D, [&](const std::vector<int>& s) {
            std::vector<DWord> letters;
            for (int i = 0; i < n; ++i) letters.push_back(DWord{s[static_cast<std::size_t>(i)], i + 1});
            out.push_back(com_monomial(std::move(letters)));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BiComMonomial> enumerate_gd_dual_bicom_monomials(int n) {
    if (n < 1) throw std::invalid_argument("n >= 1");
    std::vector<BiComMonomial> out;
    for (int k = 1; k <= n; ++k) {
        int t = n - k;
        compositions(n, k - 1, [&](const std::vector<int>& s) {
            std::vector<DWord> letters;
            for (int i = 0; i < n; ++i) letters.push_back(DWord{s[static_cast<std::size_t>(i)], i + 1});
            out.push_back(bicom_monomial(std::move(letters), t));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- pre-image construction ----

namespace {

struct FreshSource {
    int next = 0;
    int take() { return next--; }
};

int circ_op() { return gd_term_signature().op_index("circ"); }
int lie_op() { return gd_term_signature().op_index("lie"); }

Polynomial gd_poly(const Term& t, Rational c = Rational(1)) {
    return term_poly(t, gd_term_signature(), c);
}

// Lift a derivation-free LS word by renaming {,} to the bracket.
Polynomial lie_lift(const Word& w) {
    if (d_degree(w) != 0) throw std::logic_error("lie_lift needs a derivation-free word");
    return gd_poly(canonical_bracketing(w, lie_op()));
}

// Expansion of a pure-circ term into ComDer, for the Novikov base case.
ComPoly nov_expand(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return com_var(t.var_index());
        case Term::Kind::Der:
            throw std::logic_error("unexpected d in a Novikov term");
        case Term::Kind::App: {
            if (t.op() != circ_op()) throw std::logic_error("unexpected op in a Novikov term");
            return com_mul(nov_expand(t.left()), com_d(nov_expand(t.right())));
        }
    }
    throw std::logic_error("unreachable");
}

// Pre-image of x_1...x_t d^t(x_{t+1}) as a Novikov polynomial in the pattern
// variables 1..t+1, found by exact linear solve over the multilinear circ
// monomials. Cached per t; the lock keeps concurrent pre-image construction
// safe.
Polynomial novikov_base(int t) {
    static std::mutex mu;
    static std::map<int, Polynomial> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;

    static const Signature circ_only({{"circ", Symmetry::None}}, false);
    std::vector<Term> candidates = multilinear_monomials(circ_only, t + 1);

    // Index the ComDer monomials spanned by the candidate expansions.
    std::vector<ComPoly> images;
    std::map<ComMonomial, std::size_t> index;
    for (const auto& m : candidates) {
        images.push_back(nov_expand(m));
        for (const auto& [cm, c] : images.back().terms()) {
            (void)c;
            index.emplace(cm, index.size());
        }
    }
    std::vector<DWord> target_letters;
    for (int i = 1; i <= t; ++i) target_letters.push_back(DWord{0, i});
    target_letters.push_back(DWord{t, t + 1});
    ComMonomial target = com_monomial(std::move(target_letters));
    index.emplace(target, index.size());

    auto to_vec = [&](const ComPoly& p) {
        Vec v(index.size(), Rational(0));
        for (const auto& [cm, c] : p.terms()) v[index.at(cm)] = c;
        return v;
    };

    RowSpace space(index.size(), true);
    for (const auto& img : images) space.insert(to_vec(img));
    auto red = space.reduce(to_vec(ComPoly::monomial(target)));
    if (!red.in_span)
        throw std::logic_error("Novikov pre-image not found at t=" + std::to_string(t));
    Polynomial pre;
    for (const auto& [id, c] : red.combination) pre += gd_poly(candidates[id], c);
    return cache.emplace(t, std::move(pre)).first->second;
}

// F(xs, W): pre-image of x_{s1}...x_{st} [W], D(W) = |xs|; the xs are plain
// variable indices, W an LS word over the extended alphabet.
Polynomial ejection(const std::vector<int>& xs, const Word& W, FreshSource& fresh) {
    if (d_degree(W) != static_cast<int>(xs.size()))
        throw std::logic_error("ejection: derivation count mismatch");
    if (!is_ls_word(W)) throw std::logic_error("ejection: not an LS word");

    if (xs.empty()) return lie_lift(W);

    int t = static_cast<int>(xs.size());
    if (W.size() == 1) {
        // W = d^t(y).
        if (t == 1)
            return gd_poly(Term::app(circ_op(), Term::var(xs[0]), Term::var(W[0].var)));
        std::map<int, Polynomial> a;
        for (int i = 0; i < t; ++i)
            a[i + 1] = gd_poly(Term::var(xs[static_cast<std::size_t>(i)]));
        a[t + 1] = gd_poly(Term::var(W[0].var));
        return substitute_poly(novikov_base(t), a, gd_term_signature());
    }

    auto [W1, W2] = standard_split(W);
    int i = d_degree(W1);
    if (i < 1) throw std::logic_error("ejection: split head carries no derivation");
    std::vector<int> inside(xs.begin(), xs.begin() + i);
    std::vector<int> outside(xs.begin() + i, xs.end());

    // Pre-image of the sum over the straightened bracket {v, [W2]}, with the
    // outside variables attached.
    auto lift_bracket_with = [&](const DWord& letter) {
        LiePoly lp = lie_bracket(Word{letter}, W2);
        Polynomial acc;
        for (const auto& [V, c] : lp.terms()) {
            Polynomial q = ejection(outside, V, fresh);
            q *= c;
            acc += q;
        }
        return acc;
    };

    // First piece: x_{i+1}..x_t {x_1..x_i [W1], [W2]} with the inner product
    // replaced by a fresh variable z < everything.
    Polynomial P = ejection(inside, W1, fresh);
    int z = fresh.take();
    Polynomial first = lift_bracket_with(DWord{0, z});
    std::map<int, Polynomial> sub1;
    sub1[z] = P;
    first = substitute_poly(first, sub1, gd_term_signature());

    // Subtracted pieces: x_1..^x_k..x_t [W1] {x_k, [W2]}.
    Polynomial result = first;
    for (int k = 0; k < i; ++k) {
        Polynomial Pk = lift_bracket_with(DWord{0, inside[static_cast<std::size_t>(k)]});
        int z2 = fresh.take();
        std::vector<int> inside2;
        inside2.push_back(z2);
        for (int j = 0; j < i; ++j)
            if (j != k) inside2.push_back(inside[static_cast<std::size_t>(j)]);
        Polynomial piece = ejection(inside2, W1, fresh);
        std::map<int, Polynomial> sub2;
        sub2[z2] = Pk;
        piece = substitute_poly(piece, sub2, gd_term_signature());
        result -= piece;
    }
    return result;
}

Polynomial preimage_rec(const PoisMonomial& a, FreshSource& fresh) {
    int D = pois_d_degree(a);
    if (D == 0) {
        if (a.factors.size() != 1)
            throw std::logic_error("weight -1 with D=0 must be a single Lie factor");
        return lie_lift(a.factors[0]);
    }
    // Pick the greatest derived factor; its D-many companions are
    // derivation-free factors.
    std::size_t chosen = 0;
    bool found = false;
    for (std::size_t f = 0; f < a.factors.size(); ++f)
        if (d_degree(a.factors[f]) > 0) {
            chosen = f;
            found = true;
        }
    if (!found) throw std::logic_error("no derived factor despite D > 0");
    int k = d_degree(a.factors[chosen]);

    std::vector<std::size_t> dfree;
    for (std::size_t f = 0; f < a.factors.size() && static_cast<int>(dfree.size()) < k; ++f)
        if (f != chosen && d_degree(a.factors[f]) == 0) dfree.push_back(f);
    if (static_cast<int>(dfree.size()) < k)
        throw std::logic_error("not enough derivation-free factors");

    // Lift the chosen factor with k fresh slots, substitute the lifted
    // derivation-free companions.
    std::vector<int> slots;
    std::map<int, Polynomial> subs;
    for (int j = 0; j < k; ++j) {
        int u = fresh.take();
        slots.push_back(u);
        subs[u] = lie_lift(a.factors[dfree[static_cast<std::size_t>(j)]]);
    }
    Polynomial P0 = substitute_poly(ejection(slots, a.factors[chosen], fresh), subs,
                                    gd_term_signature());

    // Remaining factors, if any, recurse with a fresh stand-in of weight -1.
    std::vector<Word> rest;
    std::set<std::size_t> used(dfree.begin(), dfree.end());
    used.insert(chosen);
    for (std::size_t f = 0; f < a.factors.size(); ++f)
        if (!used.count(f)) rest.push_back(a.factors[f]);
    if (rest.empty()) return P0;

    int y = fresh.take();
    rest.push_back(Word{DWord{0, y}});
    Polynomial fy = preimage_rec(pois_monomial(std::move(rest)), fresh);
    std::map<int, Polynomial> suby;
    suby[y] = P0;
    return substitute_poly(fy, suby, gd_term_signature());
}

} // namespace

Polynomial gd_preimage(const PoisMonomial& a) {
    if (pois_weight(a) != -1) throw std::invalid_argument("gd_preimage needs weight -1");
    std::map<int, int> seen;
    for (const auto& f : a.factors)
        for (const auto& l : f) {
            if (l.var <= 0) throw std::invalid_argument("gd_preimage: reserved variable index");
            seen[l.var]++;
        }
    for (const auto& [v, cnt] : seen) {
        (void)v;
        if (cnt != 1)
            throw std::invalid_argument("gd_preimage needs a multilinear monomial; relabel first");
    }
    FreshSource fresh;
    Polynomial f = preimage_rec(a, fresh);
    // Verified on construction.
    PoisPoly image = expand_gd(f, gd_term_signature());
    if (!(image == PoisPoly::monomial(a)))
        throw std::logic_error("pre-image verification failed");
    return f;
}

} // namespace gdop
