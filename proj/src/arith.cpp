#include <mutex>
#include <string>
#include <vector>

#include <thetaform/arith.hpp>
#include <thetaform/error.hpp>

namespace thetaform
{

namespace
{

void check_even_index(long n, const char *what)
{
    if (n < 0) {
        throw out_of_range(std::string(what) + " index must be non-negative, got " + std::to_string(n));
    }
    if (n % 2 != 0) {
        throw odd_index(std::string(what) + " index must be even, got " + std::to_string(n));
    }
}

std::mutex table_mutex;

// B_0, B_1, B_2, ... (all indices; B_1 = -1/2 is needed by the recurrence).
std::vector<Rational> &bernoulli_table()
{
    static std::vector<Rational> t{Rational(1)};
    return t;
}

// E_0, E_2, E_4, ... indexed by n / 2.
std::vector<Integer> &euler_table()
{
    static std::vector<Integer> t{Integer(1)};
    return t;
}

} // namespace

Rational bernoulli(long n)
{
    check_even_index(n, "bernoulli");
    std::lock_guard<std::mutex> lock(table_mutex);
    auto &t = bernoulli_table();
    while (static_cast<long>(t.size()) <= n) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0 solved for B_m.
        const long m = static_cast<long>(t.size());
        Rational s = 0;
        for (long j = 0; j < m; ++j) {
            if (t[static_cast<std::size_t>(j)] != 0) {
                s += Rational(binomial(m + 1, j)) * t[static_cast<std::size_t>(j)];
            }
        }
        Rational b = -s / Rational(m + 1);
        b.canonicalize();
        t.push_back(b);
    }
    return t[static_cast<std::size_t>(n)];
}

Integer euler_number(long n)
{
    check_even_index(n, "euler_number");
    std::lock_guard<std::mutex> lock(table_mutex);
    auto &t = euler_table();
    while (static_cast<long>(t.size()) <= n / 2) {
        // sum_{j=0}^{m} C(2m, 2j) E_{2j} = 0 solved for E_{2m}.
        const long m = static_cast<long>(t.size());
        Integer s = 0;
        for (long j = 0; j < m; ++j) {
            s += binomial(2 * m, 2 * j) * t[static_cast<std::size_t>(j)];
        }
        t.push_back(-s);
    }
    return t[static_cast<std::size_t>(n / 2)];
}

int chi(long n)
{
    const long r = ((n % 4) + 4) % 4;
    return r == 1 ? 1 : (r == 3 ? -1 : 0);
}

int chi2(long n)
{
    return n % 2 != 0 ? 1 : 0;
}

Integer sigma_chi(long k, long n)
{
    if (n < 1) {
        throw out_of_range("sigma_chi needs n >= 1, got " + std::to_string(n));
    }
    if (k < 0) {
        throw out_of_range("sigma_chi needs k >= 0, got " + std::to_string(k));
    }
    Integer s = 0;
    const auto add = [&](long d) {
        const int c = chi(d);
        if (c > 0) {
            s += ipow(d, static_cast<unsigned long>(k));
        } else if (c < 0) {
            s -= ipow(d, static_cast<unsigned long>(k));
        }
    };
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            add(d);
            if (d * d != n) {
                add(n / d);
            }
        }
    }
    return s;
}

int kronecker(long a, long b)
{
    return mpz_si_kronecker(a, Integer(b).get_mpz_t());
}

} // namespace thetaform
