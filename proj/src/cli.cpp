#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <thetaform/cli.hpp>
#include <thetaform/corpus.hpp>
#include <thetaform/decompose.hpp>
#include <thetaform/eisenstein.hpp>
#include <thetaform/error.hpp>
#include <thetaform/numeric.hpp>
#include <thetaform/serialize.hpp>

namespace thetaform
{

void RunConfig::validate() const
{
    if (order < min_order) {
        throw invalid_argument("--order must be at least " + std::to_string(min_order) + ", got "
                               + std::to_string(order));
    }
    if (tol && !(*tol > 0 && *tol < 1)) {
        throw invalid_argument("--tol must lie in (0, 1)");
    }
}

unsigned RunConfig::worker_count() const
{
    return jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
}

namespace
{

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string supported_powers()
{
    std::string s;
    for (long two_k = 2; two_k <= 24; two_k += 2) {
        s += (s.empty() ? "" : ", ") + std::to_string(two_k);
    }
    return s;
}

void print_check(const std::string &kind, const NumericCheck &c, const RunConfig &config, std::ostream &out)
{
    if (config.output == OutputFormat::json) {
        out << dump(document("numeric-" + kind, "check", to_json(c))) << '\n';
        return;
    }
    std::ostringstream os;
    os.precision(3);
    os << (c.pass ? "pass" : "FAIL") << ": error " << c.error << ", tol " << c.tol;
    if (c.cutoff > 0) {
        os << ", tail " << c.tail << ", cutoff " << c.cutoff << ", points " << c.terms;
    } else {
        os << ", terms " << c.terms;
    }
    os << " (" << c.detail << ")";
    out << os.str() << '\n';
}

SL2Matrix matrix_from(const std::vector<long> &v)
{
    if (v.size() != 4) {
        throw invalid_argument("--sigma takes four integers a,b,c,d");
    }
    return {v[0], v[1], v[2], v[3]};
}

complex_t point_from(const std::vector<double> &v)
{
    if (v.size() != 2) {
        throw invalid_argument("--tau takes two reals re,im");
    }
    return ComplexPoint(v[0], v[1]).value();
}

} // namespace

int cmd_verify(const RunConfig &config, const VerifySelection &sel, std::ostream &out)
{
    config.validate();
    std::vector<const CorpusEntry *> entries;
    if (!sel.ids.empty()) {
        for (const auto &id : sel.ids) {
            entries.push_back(&find_identity(id));
        }
    } else {
        const auto &pool = sel.variants ? identity_variants() : identity_catalog();
        for (const auto &e : pool) {
            if (!sel.group || to_string(e.group) == *sel.group) {
                entries.push_back(&e);
            }
        }
        if (entries.empty()) {
            throw invalid_argument("no identities in group '" + sel.group.value_or("") + "'");
        }
    }
    const auto certs = verify_entries(entries, config.order, config.worker_count());
    const auto equal = static_cast<std::size_t>(std::count_if(certs.begin(), certs.end(), [](const auto &c) {
        return c.equal;
    }));
    if (config.output == OutputFormat::json) {
        json list = json::array();
        for (const auto &c : certs) {
            list.push_back(to_json(c));
        }
        json doc = document("verify", "certificates", list);
        doc["summary"] = {{"total", certs.size()}, {"equal", equal}, {"order", config.order}};
        out << dump(doc) << '\n';
    } else {
        for (std::size_t i = 0; i < certs.size(); ++i) {
            const auto &c = certs[i];
            out << c.identity_id << "  " << c.status() << "  u^" << c.order_checked << "  "
                << entries[i]->statement << '\n';
            if (c.mismatch) {
                out << "    first mismatch at u^" << c.mismatch->u_exp << ": lhs " << to_string(c.mismatch->lhs)
                    << ", rhs " << to_string(c.mismatch->rhs) << '\n';
            }
        }
        out << equal << " of " << certs.size() << " identities equal to u-order " << config.order << '\n';
    }
    return equal == certs.size() ? exit_ok : exit_mismatch;
}

int cmd_decompose(long two_k, const std::optional<std::string> &basis_file, const RunConfig &config,
                  std::ostream &out)
{
    config.validate();
    std::optional<BasisSpec> basis;
    if (basis_file) {
        std::ifstream in(*basis_file);
        if (!in) {
            throw invalid_argument("cannot open basis file '" + *basis_file + "'");
        }
        basis = parse_basis(in);
    } else if (!has_default_basis(two_k)) {
        throw unsupported_power("no built-in basis for theta2^" + std::to_string(two_k)
                                + "; supported powers: " + supported_powers() + " (or pass --basis)");
    }
    const IdentityCertificate cert = decompose(two_k, config.order, basis);
    const std::string display = render_decomposition(two_k, cert);
    json doc = document("decompose", "certificate", to_json(cert));
    doc["display"] = display;
    if (config.output == OutputFormat::json) {
        out << dump(doc) << '\n';
    } else {
        out << display << '\n' << (cert.equal ? "residual zero" : "residual nonzero") << " to u-order "
            << cert.order_checked << '\n' << dump(doc) << '\n';
    }
    return cert.equal ? exit_ok : exit_residual;
}

int cmd_poly(const std::string &family, long n, const RunConfig &config, std::ostream &out)
{
    if (family != "p" && family != "P") {
        throw invalid_argument("polynomial family must be p or P, got '" + family + "'");
    }
    if (n < 1) {
        throw invalid_argument("polynomial index must be >= 1, got " + std::to_string(n));
    }
    const PalinPoly p = family == "p" ? palin_p(n) : palin_P(n);
    std::optional<bool> closed;
    if (family == "p") {
        bool ok = true;
        for (long m = 1; m <= n - 1; ++m) {
            ok = ok && coeff_closed_form(m, n) == p.coeffs[static_cast<std::size_t>(m)];
        }
        closed = ok;
    }
    if (config.output == OutputFormat::json) {
        json body = to_json(p);
        body["family"] = family;
        body["n"] = n;
        body["display"] = p.to_string();
        if (closed) {
            body["closed_form_match"] = *closed;
        }
        out << dump(document("poly", "poly", body)) << '\n';
    } else {
        out << family << "_" << n << "(x) = " << p.to_string() << '\n' << "coefficients:";
        for (const auto &c : p.coeffs) {
            out << ' ' << to_string(c);
        }
        out << '\n' << "palindromic: " << yes_no(p.is_palindromic()) << '\n';
        if (closed) {
            out << "closed-form match: " << yes_no(*closed) << '\n';
        }
    }
    return p.is_palindromic() && closed.value_or(true) ? exit_ok : exit_mismatch;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series identities for powers of theta2 and their numeric checks", "thetaform"};
    app.require_subcommand(1);
    RunConfig config;
    bool as_json = false;
    double tol = 0;
    app.add_option("--order", config.order, "u-exponent truncation (q-order is a quarter of it)")
        ->capture_default_str();
    app.add_option("--jobs", config.jobs, "worker threads for corpus runs (0: all cores)")->capture_default_str();
    app.add_flag("--json", as_json, "emit JSON instead of text");
    auto *tol_opt = app.add_option("--tol", tol, "numeric tolerance (default 1e-9, lattice 1e-6)");

    VerifySelection sel;
    auto *verify = app.add_subcommand("verify", "check the identity corpus exactly")->fallthrough();
    verify->add_option("--id", sel.ids, "identity id (repeatable)");
    verify->add_option("--group", sel.group, "theta-powers, identity-list or prelim");
    verify->add_flag("--variants", sel.variants, "run the misprinted forms, which must fail");

    long two_k = 0;
    std::optional<std::string> basis_file;
    auto *dec = app.add_subcommand("decompose", "split theta2^(2k) into Eisenstein and cusp parts")->fallthrough();
    dec->add_option("two_k", two_k, "even power of theta2")->required();
    dec->add_option("--basis", basis_file, "basis file, lines 'prefactor_u_exp; m1^e1 m2^e2 ...'");

    std::string family;
    long poly_n = 0;
    auto *poly = app.add_subcommand("poly", "print p_n or P_n with its checks")->fallthrough();
    poly->add_option("family", family, "p or P")->required();
    poly->add_option("n", poly_n, "index, n >= 1")->required();

    auto *num = app.add_subcommand("numeric", "floating-point checks")->fallthrough();
    num->require_subcommand(1);
    std::vector<long> sigma;
    std::vector<double> tau;
    long power = 2, k = 1, cutoff = 400;
    std::string lattice_family, branch = "auto";
    auto *tr = num->add_subcommand("transform", "theta2^power transformation law")->fallthrough();
    tr->add_option("--sigma", sigma, "a,b,c,d")->delimiter(',')->required();
    tr->add_option("--tau", tau, "re,im")->delimiter(',')->required();
    tr->add_option("--power", power, "even power")->capture_default_str();
    auto *eta = num->add_subcommand("eta", "Dedekind eta transformation")->fallthrough();
    eta->add_option("--sigma", sigma, "a,b,c,d")->delimiter(',')->required();
    eta->add_option("--tau", tau, "re,im")->delimiter(',')->required();
    eta->add_option("--branch", branch, "auto, d-odd or c-odd")->capture_default_str();
    auto *lat = num->add_subcommand("lattice", "truncated lattice sum against its q-expansion")->fallthrough();
    lat->add_option("--family", lattice_family, "M4K, M4K2STAR or M2K1CHI")->required();
    lat->add_option("--k", k, "family index")->capture_default_str();
    lat->add_option("--tau", tau, "re,im")->delimiter(',')->required();
    lat->add_option("--cutoff", cutoff, "|m|, |n| bound")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    config.output = as_json ? OutputFormat::json : OutputFormat::text;
    if (*tol_opt) {
        config.tol = tol;
    }

    try {
        config.validate();
        if (*verify) {
            return cmd_verify(config, sel, out);
        }
        if (*dec) {
            return cmd_decompose(two_k, basis_file, config, out);
        }
        if (*poly) {
            return cmd_poly(family, poly_n, config, out);
        }
        NumericCheck c;
        std::string kind;
        if (*tr) {
            kind = "transform";
            c = transform_check(matrix_from(sigma), point_from(tau), power, config.tol.value_or(default_theta_tol));
        } else if (*eta) {
            kind = "eta";
            EtaBranch b;
            if (branch == "auto") {
                b = EtaBranch::automatic;
            } else if (branch == "d-odd") {
                b = EtaBranch::d_odd;
            } else if (branch == "c-odd") {
                b = EtaBranch::c_odd;
            } else {
                throw invalid_argument("--branch must be auto, d-odd or c-odd");
            }
            c = dedekind_eta_check(matrix_from(sigma), point_from(tau), config.tol.value_or(default_theta_tol), b);
        } else {
            kind = "lattice";
            c = lattice_sum_check(parse_lattice_family(lattice_family), k, point_from(tau), cutoff,
                                  config.tol.value_or(default_lattice_tol));
        }
        print_check(kind, c, config, out);
        return c.pass ? exit_ok : exit_mismatch;
    } catch (const residual_nonzero &e) {
        err << "residual nonzero: " << e.what() << '\n';
        return exit_residual;
    } catch (const insufficient_order &e) {
        err << "insufficient order: " << e.what() << '\n';
        return exit_residual;
    } catch (const cutoff_too_small &e) {
        err << "cutoff too small: " << e.what() << '\n';
        return exit_mismatch;
    } catch (const internal_mismatch &e) {
        err << "internal mismatch: " << e.what() << '\n';
        return exit_mismatch;
    } catch (const error &e) {
        // Precondition failures: bad ids, odd c, unsupported powers, points too
        // close to the real axis.
        err << "usage: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace thetaform
