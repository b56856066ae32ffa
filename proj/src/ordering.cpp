#include "csd/ordering.hpp"

#include <algorithm>
#include <sstream>

#include "csd/errors.hpp"

namespace csd {

namespace {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::vector<Vec> walls_ascending(const ExponentTable& table) {
    std::vector<Vec> walls;
    for (const auto& [key, u] : table.entries) walls.push_back({key.first, key.second});
    std::sort(walls.begin(), walls.end(), vec_less);
    return walls;
}

void drop_zero_factors(FactorList& list) {
    list.erase(std::remove_if(list.begin(), list.end(),
                              [](const Factor& f) { return f.exponent.is_zero(); }),
               list.end());
}

} // namespace

Pbc ExponentTable::lookup(const Vec& v) const {
    if (!v.in_nplus() || v.degree() > max_degree)
        throw PreconditionError("ExponentTable::lookup: wall " + vec_str(v) +
                                " outside covered range (max degree " +
                                std::to_string(max_degree) + ")");
    auto it = entries.find({v.a, v.b});
    return it == entries.end() ? Pbc() : it->second;
}

ExponentTable seed_table() {
    ExponentTable t;
    t.max_degree = 2;
    t.entries[{1, 0}] = Pbc::basis(1, 0);
    t.entries[{0, 1}] = Pbc::basis(0, 1);
    t.entries[{1, 1}] = Pbc::basis(1, 1);
    return t;
}

std::pair<FactorList, FactorList> split_parts(const FactorList& c) {
    const long len = (long)c.size();
    // Smallest j0 such that c[j0..] is strictly increasing and every factor
    // of c[j0..] exceeds every factor of c[..j0); j0 = len always works.
    long j0 = len;
    for (long cand = len - 1; cand >= 0; --cand) {
        if (cand + 1 < len && !vec_less(c[cand].vector, c[cand + 1].vector)) break;
        bool dominates = true;
        for (long i = 0; i < cand && dominates; ++i)
            if (!vec_greater(c[cand].vector, c[i].vector)) dominates = false;
        if (!dominates) continue; // a shorter tail may still qualify
        j0 = cand;
    }
    // The scan above stops extending once the tail fails to be increasing;
    // any candidate below that point is invalid, so j0 is the minimum.
    return {FactorList(c.begin(), c.begin() + j0), FactorList(c.begin() + j0, c.end())};
}

FactorList rewrite_pair(const Factor& x, const Factor& a, const ExponentTable& table, int l) {
    if (!x.vector.in_nplus() || !a.vector.in_nplus())
        throw PreconditionError("rewrite_pair: vectors must lie in N+");
    if (!vec_greater(x.vector, a.vector))
        throw PreconditionError("rewrite_pair: pair " + vec_str(x.vector) + " " +
                                vec_str(a.vector) + " is not anti-ordered");

    // Parallel factors commute.
    if (skew_form(a.vector, x.vector) == 0) return {a, x};

    const Mat2 f{a.vector, x.vector};
    const long det = f.det();
    if (det <= 0)
        throw InvariantError("rewrite_pair: nonpositive determinant for " + vec_str(a.vector) +
                             " " + vec_str(x.vector));

    if (f.is_identity()) {
        // The pair is Psi[(0,1)] Psi[(1,0)]: the defining relation of the
        // table itself, valid mod G^{> l+1} when the table reaches l + 1.
        if (table.max_degree < l + 1)
            throw PreconditionError(
                "rewrite_pair: initial-wall pair needs a table complete to degree l + 1");
        FactorList out{a};
        for (const auto& [key, u] : table.entries) {
            if (key.first < 1 || key.second < 1) continue;
            Pbc e = substitute(u, a.exponent, x.exponent);
            if (!e.is_zero()) out.push_back({{key.first, key.second}, e});
        }
        std::sort(out.begin() + 1, out.end(),
                  [](const Factor& p, const Factor& q) { return vec_less(p.vector, q.vector); });
        out.push_back(x);
        return out;
    }

    // Degrees at least l + 2 together: the factors merely commute mod G^{> l+1}.
    if (a.vector.degree() + x.vector.degree() >= l + 2) return {a, x};

    // General case, via the similarity transformation by F = (a | x):
    // Psi[x]^{fx} Psi[a]^{fa} = Psi[a]^{fa} (prod Psi[F(p,q)]^{u_{(p,q)}(det fa, det fx)/det}) Psi[x]^{fx}.
    const Pbc fa = a.exponent * Rational(det);
    const Pbc fx = x.exponent * Rational(det);
    if (!fa.has_integer_coeffs() || !fa.has_nonneg_coeffs() || !fx.has_integer_coeffs() ||
        !fx.has_nonneg_coeffs())
        throw PreconditionError("rewrite_pair: scaled exponents of " + vec_str(a.vector) + " " +
                                vec_str(x.vector) + " are not nonnegative integer PBCs");

    FactorList middle;
    const long da = a.vector.degree(), dx = x.vector.degree();
    for (long p = 1; p * da + dx <= l + 1; ++p) {
        for (long q = 1; p + q <= l && p * da + q * dx <= l + 1; ++q) {
            Pbc e = substitute(table.lookup({p, q}), fa, fx) * Rational(1, det);
            if (e.is_zero()) continue;
            middle.push_back({f.apply({p, q}), e});
        }
    }
    std::sort(middle.begin(), middle.end(),
              [](const Factor& p, const Factor& q) { return vec_less(p.vector, q.vector); });

    FactorList out;
    out.reserve(middle.size() + 2);
    out.push_back(a);
    out.insert(out.end(), middle.begin(), middle.end());
    out.push_back(x);
    return out;
}

FactorList push_out(FactorList list, const Vec& xy, const ExponentTable& table, int l) {
    if (!xy.in_nplus()) throw PreconditionError("push_out: target must lie in N+");
    drop_zero_factors(list);
    for (const Factor& f : list)
        if (vec_greater(f.vector, xy))
            throw PreconditionError("push_out: factor " + vec_str(f.vector) +
                                    " exceeds the target " + vec_str(xy));

    list.push_back({xy, Pbc()});
    std::size_t accpos = list.size() - 1;

    // Generous guard; the algorithm provably terminates.
    for (long steps = 0;; ++steps) {
        if (steps > 20'000'000) throw InvariantError("push_out: step budget exhausted");
        // Rightmost occurrence of xy left of the accumulator.
        long j = -1;
        for (long i = (long)accpos - 1; i >= 0; --i) {
            if (list[i].vector == xy) {
                j = i;
                break;
            }
        }
        if (j < 0) break;

        if ((std::size_t)(j + 1) == accpos) {
            list[accpos].exponent += list[j].exponent;
            list.erase(list.begin() + j);
            --accpos;
            continue;
        }

        FactorList repl = rewrite_pair(list[j], list[j + 1], table, l);
        list.erase(list.begin() + j, list.begin() + j + 2);
        list.insert(list.begin() + j, repl.begin(), repl.end());
        accpos += repl.size() - 2;
    }

    if (list[accpos].exponent.is_zero()) list.erase(list.begin() + accpos);
    return list;
}

FactorList order_product_mod(FactorList list, const ExponentTable& table, int l) {
    if (l < 1) throw PreconditionError("order_product_mod: level must be at least 1");
    for (const Factor& f : list) {
        if (!f.vector.in_nplus())
            throw PreconditionError("order_product_mod: factor vector outside N+");
        if (f.vector.degree() > l + 1)
            throw PreconditionError("order_product_mod: factor " + vec_str(f.vector) +
                                    " has degree above l + 1");
    }
    drop_zero_factors(list);

    // Every vector a rewrite can create has degree <= l + 1, so sweeping all
    // of them from the largest down pushes each into the ordered tail before
    // any smaller one moves.
    std::vector<Vec> targets;
    for (long a = 0; a <= l + 1; ++a)
        for (long b = 0; a + b <= l + 1; ++b)
            if (a != 0 || b != 0) targets.push_back({a, b});
    std::sort(targets.begin(), targets.end(), vec_greater);

    FactorList tail;
    for (const Vec& xy : targets) {
        bool present = std::any_of(list.begin(), list.end(),
                                   [&](const Factor& f) { return f.vector == xy; });
        if (!present) continue;
        list = push_out(list, xy, table, l);
        if (!list.empty() && list.back().vector == xy) {
            tail.insert(tail.begin(), list.back());
            list.pop_back();
        }
    }
    if (!list.empty()) throw InvariantError("order_product_mod: unswept factors remain");
    for (std::size_t i = 0; i + 1 < tail.size(); ++i)
        if (!vec_less(tail[i].vector, tail[i + 1].vector))
            throw InvariantError("order_product_mod: result is not strictly increasing");
    return tail;
}

namespace {

// Both passes of the degree step read the new exponents off an ordered
// product in which the unknown degree-(l+1) factors were omitted; those
// factors only ever merge additively, so the leftover exponent at a
// degree-(l+1) wall is exactly the increment of the recurrence.
struct DegreeStep {
    std::map<std::pair<long, long>, Pbc> increments;

    void read_off(const FactorList& ordered, const ExponentTable& table, int l,
                  bool shifted_in_m, const Vec& banned) {
        increments.clear();
        for (const Factor& f : ordered) {
            const Vec v = f.vector;
            if (v == banned)
                throw InvariantError("advance_degree: excluded initial wall reappeared");
            if (v.degree() == l + 1) {
                increments[{v.a, v.b}] = f.exponent;
                continue;
            }
            // Known walls must come out shifted by one step of the recurrence.
            Pbc expected = shifted_in_m ? shift_m(eval_n(table.lookup(v), 1))
                                        : shift_n(table.lookup(v));
            if (f.exponent != expected)
                throw InvariantError("advance_degree: exponent of " + vec_str(v) +
                                     " disagrees with the known table");
        }
    }

    Pbc increment(long a, long b) const {
        auto it = increments.find({a, b});
        return it == increments.end() ? Pbc() : it->second;
    }
};

} // namespace

ExponentTable advance_degree(const ExponentTable& table) {
    const int l = table.max_degree;
    if (l < 2) throw PreconditionError("advance_degree: table must be complete to degree >= 2");
    const std::vector<Vec> walls = walls_ascending(table);

    // Pass 1: order Psi[(1,0)] Psi[(1,1)] (ordered product at n = 1); the
    // leftover at (a, b), a + b = l + 1, is u(m+1, 1) - u(m, 1).
    FactorList c1{{{1, 0}, Pbc::constant(1)}, {{1, 1}, Pbc::constant(1)}};
    for (const Vec& v : walls) {
        if (v == Vec{0, 1}) continue;
        c1.push_back({v, eval_n(table.lookup(v), 1)});
    }
    DegreeStep pass1;
    pass1.read_off(order_product_mod(std::move(c1), table, l), table, l, true, {0, 1});

    std::map<std::pair<long, long>, Pbc> u_m1; // u_{(a,b)}(m, 1) at degree l + 1
    for (long a = 1; a <= l; ++a) {
        long b = l + 1 - a;
        Pbc f = pass1.increment(a, b);
        if (f.deg_n() > 0)
            throw InvariantError("advance_degree: n-dependent increment in the n = 1 pass");
        u_m1[{a, b}] = prefix_sum_m(f);
    }

    // Pass 2: order (product at n = 1)(product at n); the leftover is
    // u(m, n+1) - u(m, n) - u(m, 1).
    FactorList c2;
    for (const Vec& v : walls) {
        if (v == Vec{1, 0}) continue;
        c2.push_back({v, eval_n(table.lookup(v), 1)});
    }
    for (const Vec& v : walls) {
        if (v == Vec{1, 0}) continue;
        c2.push_back({v, table.lookup(v)});
    }
    DegreeStep pass2;
    pass2.read_off(order_product_mod(std::move(c2), table, l), table, l, false, {1, 0});

    ExponentTable out = table;
    out.max_degree = l + 1;
    for (long a = 1; a <= l; ++a) {
        long b = l + 1 - a;
        Pbc u = u_m1[{a, b}] * Pbc::basis(0, 1) + prefix_sum_n(pass2.increment(a, b));
        if (eval_n(u, 1) != u_m1[{a, b}])
            throw InvariantError("advance_degree: n = 1 slice mismatch at wall (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
        if (u.is_zero())
            throw InvariantError("advance_degree: vanishing wall exponent at (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
        Pbc scaled = u * Rational(std::gcd(a, b));
        if (!scaled.has_integer_coeffs() || !scaled.has_nonneg_coeffs())
            throw InvariantError("advance_degree: gcd-scaled exponent at (" + std::to_string(a) +
                                 "," + std::to_string(b) + ") is not a nonnegative integer PBC");
        out.entries[{a, b}] = std::move(u);
    }
    return out;
}

ExponentTable compute_table(int max_degree) {
    if (max_degree < 2) throw PreconditionError("compute_table: degree must be at least 2");
    ExponentTable t = seed_table();
    while (t.max_degree < max_degree) t = advance_degree(t);
    return t;
}

FactorList table_to_factor_list(const ExponentTable& table) {
    FactorList out;
    for (const Vec& v : walls_ascending(table)) out.push_back({v, table.lookup(v)});
    return out;
}

} // namespace csd
