#pragma once

#include "vanhom/config.hpp"
#include "vanhom/lattice.hpp"
#include "vanhom/local_systems.hpp"
#include "vanhom/smith.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

/* Shared test utilities.  The quotient-group, determinant and rank oracles
   here are deliberately written with different algorithms than the library
   (Laplace expansion, cross-multiplication elimination, counting in a
   fundamental domain) so they can disagree with it when the library is wrong. */

namespace vanhom::testing {

inline std::mt19937_64 make_rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline long long rand_in(std::mt19937_64& rng, long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long long lo, long long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Int(rand_in(rng, lo, hi));
    return m;
}

struct UnimodularPair {
    IntMatrix m;
    IntMatrix m_inv;
};

// Product of random elementary matrices, with the inverse tracked op by op.
inline UnimodularPair random_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 6) {
    UnimodularPair p{IntMatrix::identity(n), IntMatrix::identity(n)};
    if (n == 0) return p;
    for (int k = 0; k < ops; ++k) {
        const std::size_t i = static_cast<std::size_t>(rand_in(rng, 0, n - 1));
        const std::size_t j = static_cast<std::size_t>(rand_in(rng, 0, n - 1));
        switch (rand_in(rng, 0, 2)) {
            case 0: {
                if (i == j) break;
                Int c(rand_in(rng, -2, 2));
                if (c == 0) break;
                p.m.row_axpy(i, j, c);
                p.m_inv.col_axpy(j, i, -c);
                break;
            }
            case 1:
                p.m.swap_rows(i, j);
                p.m_inv.swap_cols(i, j);
                break;
            default:
                p.m.negate_row(i);
                p.m_inv.negate_col(i);
                break;
        }
    }
    return p;
}

// Laplace expansion along the first row.
inline Int cofactor_det(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Int total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a(0, c) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t k = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub(i - 1, k++) = a(i, j);
            }
        }
        Int term = a(0, c) * cofactor_det(sub);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

// Rank by elimination with cross-multiplication only (no division anywhere).
inline std::size_t elimination_rank(IntMatrix w) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < w.cols() && rank < w.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < w.rows() && w(pivot, col) == 0) ++pivot;
        if (pivot == w.rows()) continue;
        w.swap_rows(rank, pivot);
        for (std::size_t i = rank + 1; i < w.rows(); ++i) {
            if (w(i, col) == 0) continue;
            Int f = w(i, col);
            Int p = w(rank, col);
            for (std::size_t j = 0; j < w.cols(); ++j)
                w(i, j) = w(i, j) * p - f * w(rank, j);
        }
        ++rank;
    }
    return rank;
}

namespace detail {

inline void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                            std::size_t start, std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, cur, i + 1, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets_of_size(n, k, cur, 0, out);
    return out;
}

}  // namespace detail

/* The nonzero Smith diagonal reconstructed from determinantal divisors:
   d_k = D_k / D_{k-1} with D_k the gcd of all k x k minors. */
inline std::vector<Int> determinantal_divisor_diagonal(const IntMatrix& a) {
    using boost::multiprecision::gcd;
    std::vector<Int> out;
    Int prev = 1;
    const std::size_t kmax = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        Int g = 0;
        for (const auto& rows : detail::subsets(a.rows(), k))
            for (const auto& cols : detail::subsets(a.cols(), k)) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
                g = gcd(g, cofactor_det(sub));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline std::vector<long long> divisors_of(long long n) {
    std::vector<long long> out;
    for (long long k = 1; k <= n; ++k)
        if (n % k == 0) out.push_back(k);
    return out;
}

inline IntMatrix adjugate(const IntMatrix& a) {
    const std::size_t n = a.rows();
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix sub(n - 1, n - 1);
            std::size_t r = 0;
            for (std::size_t ii = 0; ii < n; ++ii) {
                if (ii == i) continue;
                std::size_t c = 0;
                for (std::size_t jj = 0; jj < n; ++jj) {
                    if (jj == j) continue;
                    sub(r, c++) = a(ii, jj);
                }
                ++r;
            }
            Int m = cofactor_det(sub);
            adj(j, i) = ((i + j) % 2 == 0) ? m : -m;
        }
    return adj;
}

/* Invariant factors of Z^m / A Z^m for square A with 1 <= |det A| <= 60,
   found by counting order-k elements in a fundamental domain.  N Z^m lies
   inside A Z^m, so the box [0,N)^m covers each coset exactly N^(m-1) times,
   and k x lands in the image iff k adj(A) x = 0 mod det. */
inline CokernelInvariants brute_force_quotient(const IntMatrix& a) {
    const std::size_t m = a.rows();
    if (m != a.cols() || m == 0 || m > 3)
        throw std::invalid_argument("quotient enumeration handles square sizes 1..3");
    Int det = cofactor_det(a);
    if (det == 0) throw std::invalid_argument("quotient enumeration needs a finite quotient");
    const long long N = to_long_long(det < 0 ? -det : det);
    if (N > 60) throw std::invalid_argument("quotient enumeration is capped at order 60");

    IntMatrix adj = adjugate(a);
    const std::vector<long long> ks = divisors_of(N);
    std::vector<long long> hits(ks.size(), 0);

    std::vector<long long> x(m, 0);
    IntVector z(m);
    for (;;) {
        for (std::size_t i = 0; i < m; ++i) {
            z[i] = 0;
            for (std::size_t j = 0; j < m; ++j) z[i] += adj(i, j) * x[j];
        }
        for (std::size_t t = 0; t < ks.size(); ++t) {
            bool in_image = true;
            for (std::size_t i = 0; i < m && in_image; ++i)
                if ((Int(ks[t]) * z[i]) % det != 0) in_image = false;
            if (in_image) ++hits[t];
        }
        std::size_t pos = 0;
        while (pos < m && ++x[pos] == N) x[pos++] = 0;
        if (pos == m) break;
    }

    long long scale = 1;
    for (std::size_t i = 1; i < m; ++i) scale *= N;
    std::vector<long long> counts(ks.size());
    for (std::size_t t = 0; t < ks.size(); ++t) {
        if (hits[t] % scale != 0) throw std::logic_error("coset covering miscount");
        counts[t] = hits[t] / scale;
    }

    // Match the counts against every divisor chain d_1 | ... | d_m with product N.
    const std::vector<long long> divs = divisors_of(N);
    std::vector<long long> chain(m, 1), found;
    auto counts_match = [&]() {
        for (std::size_t t = 0; t < ks.size(); ++t) {
            long long expect = 1;
            for (long long d : chain) expect *= std::gcd(ks[t], d);
            if (expect != counts[t]) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, std::size_t pos, long long remaining) -> void {
        if (!found.empty()) return;
        if (pos == m) {
            if (remaining == 1 && counts_match()) found = chain;
            return;
        }
        for (long long d : divs) {
            if (remaining % d != 0) continue;
            if (pos > 0 && d % chain[pos - 1] != 0) continue;
            chain[pos] = d;
            self(self, pos + 1, remaining / d);
        }
        chain[pos] = 1;
    };
    search(search, 0, N);
    if (found.empty()) throw std::logic_error("no invariant factor chain fits the counts");

    CokernelInvariants out;
    out.free_rank = 0;
    for (long long d : found)
        if (d > 1) out.torsion.push_back(Int(d));
    return out;
}

inline IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const IntMatrix& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix out(rows, cols);
    std::size_t r = 0, c = 0;
    for (const IntMatrix& b : blocks) {
        set_block(out, r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return out;
}

/* Valid, exact-mode-capable random configuration: every special point gets a
   relative cycle lattice generated inside the blockwise branch kernels, with
   b_fiber_free equal to its rank.  chi_fiber values are kept on the side that
   cannot drive the middle rank negative. */
inline HypersurfaceConfig random_config(std::mt19937_64& rng) {
    HypersurfaceConfig cfg;
    cfg.n = rand_in(rng, 2, 3);
    cfg.d = rand_in(rng, 2, 5);
    cfg.label = "randomized";
    const long long rho = rand_in(rng, 1, 3);
    std::vector<long long> budget;  // loops still available before |W| = 6
    for (long long i = 0; i < rho; ++i) {
        CurveComponent c;
        c.id = "c" + std::to_string(i);
        c.mu_perp = rand_in(rng, 1, 4);
        c.genus = 0;
        c.nu = rand_in(rng, 2, 4);
        budget.push_back(6 - *c.nu);
        if (budget.back() >= 3 && rand_in(rng, 0, 9) < 3) {
            c.genus = 1;
            budget.back() -= 2;
            c.genus_loop_monodromies.push_back(
                random_unimodular(rng, static_cast<std::size_t>(c.mu_perp)).m);
            c.genus_loop_monodromies.push_back(
                random_unimodular(rng, static_cast<std::size_t>(c.mu_perp)).m);
        }
        cfg.components.push_back(std::move(c));
    }

    const long long npts = rand_in(rng, 0, 2);
    for (long long p = 0; p < npts; ++p) {
        SpecialPoint q;
        q.id = "q" + std::to_string(p);
        const long long picks = rand_in(rng, 1, 2);
        std::vector<long long> order(rho);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<IntMatrix> wang_blocks;
        std::size_t ambient = 0;
        for (long long t = 0; t < picks && t < rho; ++t) {
            const long long i = order[static_cast<std::size_t>(t)];
            if (budget[i] <= 0) continue;
            const std::size_t mu = static_cast<std::size_t>(cfg.components[i].mu_perp);
            SpecialPointIncidence si;
            si.component = cfg.components[i].id;
            const long long branches = rand_in(rng, 1, std::min<long long>(2, budget[i]));
            for (long long b = 0; b < branches; ++b) {
                si.branch_monodromies.push_back(random_unimodular(rng, mu).m);
                wang_blocks.push_back(subtract_identity(si.branch_monodromies.back()));
                ambient += mu;
            }
            budget[i] -= branches;
            q.incidences.push_back(std::move(si));
        }
        if (q.incidences.empty()) continue;

        Sublattice joint = kernel_basis(block_diagonal(wang_blocks));
        if (joint.rank() > 0) {
            const long long t = rand_in(rng, 0, static_cast<long long>(joint.rank()));
            IntMatrix gens(ambient, static_cast<std::size_t>(t));
            for (long long g = 0; g < t; ++g) {
                IntVector coeff(joint.rank());
                for (std::size_t k = 0; k < joint.rank(); ++k)
                    coeff[k] = Int(rand_in(rng, -2, 2));
                IntVector v = joint.generators() * coeff;
                for (std::size_t k = 0; k < ambient; ++k) gens(k, static_cast<std::size_t>(g)) = v[k];
            }
            Sublattice l = Sublattice::from_generators(ambient, gens);
            q.b_fiber_free = static_cast<long long>(l.rank());
            if (l.rank() > 0) q.relative_cycle_lattice = l.generators().transposed();
        } else {
            q.b_fiber_free = 0;
        }
        q.chi_fiber = (cfg.n % 2 == 0) ? rand_in(rng, 1, 4) : rand_in(rng, -2, 1);
        cfg.special_points.push_back(std::move(q));
    }

    const long long nisol = rand_in(rng, 0, 2);
    for (long long r = 0; r < nisol; ++r) {
        IsolatedPoint pt;
        pt.id = "r" + std::to_string(r);
        pt.milnor_number = rand_in(rng, 1, 5);
        cfg.isolated_points.push_back(std::move(pt));
    }
    return cfg;
}

/* Defining property of a top vanishing class, checked from scratch: every
   branch and genus loop kills the component block of w, and the stacked
   branch values at each special point lie in the relative cycle lattice.
   Points whose lattice is undetermined impose nothing here. */
inline bool is_top_class(const HypersurfaceConfig& cfg, const IntVector& w) {
    std::map<std::string, std::size_t> offset;
    std::size_t total = 0;
    for (const CurveComponent& c : cfg.components) {
        offset[c.id] = total;
        total += static_cast<std::size_t>(c.mu_perp);
    }
    if (w.size() != total) return false;

    auto block_of = [&](const std::string& id, std::size_t mu) {
        IntVector b(mu);
        for (std::size_t t = 0; t < mu; ++t) b[t] = w[offset.at(id) + t];
        return b;
    };
    auto killed_by = [&](const IntMatrix& a, const std::string& id) {
        const std::size_t mu = a.rows();
        return is_zero_vector(subtract_identity(a) * block_of(id, mu));
    };

    for (const CurveComponent& c : cfg.components)
        for (const IntMatrix& a : c.genus_loop_monodromies)
            if (!killed_by(a, c.id)) return false;
    for (const SpecialPoint& q : cfg.special_points) {
        for (const SpecialPointIncidence& si : q.incidences)
            for (const IntMatrix& a : si.branch_monodromies)
                if (!killed_by(a, si.component)) return false;

        SpecialPointLocalData d = special_point_data(q, cfg);
        if (!d.relative_cycles) continue;
        IntVector stacked(d.ambient);
        std::size_t at = 0;
        for (const SpecialPointIncidence& si : q.incidences) {
            const std::size_t mu =
                static_cast<std::size_t>(find_component(cfg, si.component)->mu_perp);
            for (std::size_t b = 0; b < si.branch_monodromies.size(); ++b) {
                IntVector block = block_of(si.component, mu);
                for (std::size_t t = 0; t < mu; ++t) stacked[at + t] = block[t];
                at += mu;
            }
        }
        if (!d.relative_cycles->contains(stacked)) return false;
    }
    return true;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline HypersurfaceConfig load_fixture(const std::string& name) {
    return parse_config(read_file(std::string(VANHOM_CONFIG_DIR) + "/" + name));
}

inline HypersurfaceConfig load_testdata(const std::string& name) {
    return parse_config(read_file(std::string(VANHOM_TESTDATA_DIR) + "/" + name));
}

}  // namespace vanhom::testing
