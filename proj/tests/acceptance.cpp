// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "descent/characters.hpp"
#include "descent/descent_a.hpp"
#include "descent/descent_b.hpp"
#include "descent/domino.hpp"
#include "descent/tableaux.hpp"
#include "descent/verify.hpp"

using namespace descent;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

// Runs each (identity, n range) and keeps the first problem.
Outcome identities(const std::vector<std::tuple<std::string, int, int>>& runs) {
    Outcome out;
    std::int64_t checked = 0;
    for (const auto& [id, lo, hi] : runs)
        for (int n = lo; n <= hi; ++n) {
            const auto r = verify_identity(id, n);
            checked += r.checked;
            if (r.status == VerificationStatus::Error) out.fail(id + " n=" + std::to_string(n) + ": " + r.error);
            if (r.status == VerificationStatus::Fail)
                out.fail(id + " n=" + std::to_string(n) + ": " + r.counterexample->key + " lhs=" +
                         r.counterexample->lhs + " rhs=" + r.counterexample->rhs);
        }
    if (out.ok) out.detail = std::to_string(checked) + " exact comparisons";
    return out;
}

bool orthogonal(const CharacterTable& t) {
    for (std::size_t r1 = 0; r1 < t.rows.size(); ++r1)
        for (std::size_t r2 = 0; r2 < t.rows.size(); ++r2) {
            std::int64_t s = 0;
            for (std::size_t c = 0; c < t.columns.size(); ++c) s += t.class_sizes[c] * t.values[r1][c] * t.values[r2][c];
            if (s != (r1 == r2 ? t.group_order() : 0)) return false;
        }
    return true;
}

Outcome structural() {
    Outcome out;
    try {
        for (int n = 1; n <= 6; ++n) a_constants(n);
        for (int n = 1; n <= 4; ++n) c_constants(n);
    } catch (const std::exception& e) {
        out.fail(std::string("constancy assertion fired: ") + e.what());
    }
    for (int n = 1; n <= 6; ++n)
        if (!orthogonal(symmetric_character_table(n))) out.fail("S_" + std::to_string(n) + " orthogonality");
    for (int n = 1; n <= 4; ++n)
        if (!orthogonal(hyperoctahedral_character_table(n))) out.fail("B_" + std::to_string(n) + " orthogonality");
    for (int n = 1; n <= 7; ++n) {
        std::int64_t s = 0;
        for (const auto& l : enumerate_partitions(n)) {
            const auto f = static_cast<std::int64_t>(enumerate_SYT(l).size());
            s += f * f;
        }
        if (s != factorial(n)) out.fail("sum of squared SYT counts at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) {
        std::int64_t s = 0;
        for (const auto& l : enumerate_P0(n)) {
            const auto f = static_cast<std::int64_t>(enumerate_SDT(l).size());
            s += f * f;
        }
        if (s != (std::int64_t{1} << n) * factorial(n))
            out.fail("sum of squared domino tableau counts at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 8; ++n) {
        std::size_t s = 0;
        for (int k = 0; k <= n; ++k) s += enumerate_partitions(k).size() * enumerate_partitions(n - k).size();
        if (enumerate_P0(n).size() != s) out.fail("|P0(" + std::to_string(n) + ")|");
    }
    for (int n = 1; n <= 12; ++n)
        if (enumerate_compositions(n).size() != (std::size_t{1} << (n - 1)))
            out.fail("composition count at n=" + std::to_string(n));
    if (out.ok) out.detail = "constancy, orthogonality, tableau and shape counts";
    return out;
}

struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "a^{}_{IJ} = sum d d, n=1..6", [] { return identities({{"carter", 1, 6}}); }},
        {2, "a^[n-1]_{IJ} = sum d d', n=1..6", [] { return identities({{"carter-conjugate", 1, 6}}); }},
        {3, "F_K(XY) double expansion gives the a table, N=4, n=1..4", [] { return identities({{"gessel", 1, 4}}); }},
        {4, "b: inversion = direct = matrix count; A^{} = m_{r,c} = sum K K, n=1..5",
         [] { return identities({{"ab-inversion", 1, 5}, {"matrix-count", 1, 5}}); }},
        {5, "triple a = sum g d d d, n=1..5; m_{p,q,r} = sum g K K K, n=1..4",
         [] { return identities({{"triple-a", 1, 5}, {"array-count", 1, 4}}); }},
        {6, "c^{}_{IJ} = sum d^B d^B, n=1..4", [] { return identities({{"carter-b", 1, 4}}); }},
        {7, "F^B_K(XY) double expansion gives the c table, n=1..3", [] { return identities({{"chow", 1, 3}}); }},
        {8, "domino function identities and standardization, n=1..3, N=3",
         [] {
             return identities({{"domino-in-fb", 1, 3},
                                {"domino-schur", 1, 3},
                                {"standardization", 1, 3},
                                {"domino-cauchy", 1, 3},
                                {"wreath-power-sum", 1, 3},
                                {"domino-kronecker", 1, 3}});
         }},
        {9, "triple c = sum g^B d^B d^B d^B with both g^B routes, n=1..3",
         [] { return identities({{"triple-c", 1, 3}}); }},
        {10, "structural suites", structural},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.ok;
        std::printf("criterion %2d: %s  %s [%s] (%.2f s)\n", c.number, o.ok ? "PASS" : "FAIL", c.title.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
