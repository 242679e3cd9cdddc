// dtc: DT invariants of quivers from the command line.
#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtc/acceptance.hpp"
#include "dtc/dtpipeline.hpp"
#include "dtc/lie.hpp"
#include "dtc/quiver.hpp"
#include "dtc/trees.hpp"

namespace {

using namespace dtc;

struct Row {
    DimVector gamma;
    RatFunc coefficient;
    RatFunc omega;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? "\"\"" : std::string(1, c);
    }
    return out + "\"";
}

void render(const std::vector<Row>& rows, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << "gamma,coefficient,omega_bar\n";
        for (const auto& r : rows) {
            out << csv_field(r.gamma.to_string()) << ',' << csv_field(r.coefficient.to_string()) << ','
                << csv_field(r.omega.to_string()) << '\n';
        }
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            std::vector<int> g(r.gamma.entries().begin(), r.gamma.entries().end());
            arr.push_back({{"gamma", g}, {"coefficient", r.coefficient.to_string()}, {"omega_bar", r.omega.to_string()}});
        }
        out << arr.dump(2) << '\n';
    } else {
        std::size_t wg = 5;
        std::size_t wc = 11;
        for (const auto& r : rows) {
            wg = std::max(wg, r.gamma.to_string().size());
            wc = std::max(wc, r.coefficient.to_string().size());
        }
        auto line = [&](const std::string& a, const std::string& b, const std::string& c) {
            out << a << std::string(wg - a.size() + 2, ' ') << b << std::string(wc - b.size() + 2, ' ') << c << '\n';
        };
        line("gamma", "coefficient", "omega_bar");
        for (const auto& r : rows) {
            line(r.gamma.to_string(), r.coefficient.to_string(), r.omega.to_string());
        }
    }
}

std::vector<Row> table(const OneCollection& c, int rank, int bound) {
    std::vector<DimVector> degrees = vectors_up_to_degree(rank, bound);
    std::sort(degrees.begin(), degrees.end());
    std::vector<Row> rows;
    for (const auto& gamma : degrees) {
        RatFunc v = c(gamma);
        rows.push_back({gamma, v, omega_bar(v)});
    }
    return rows;
}

CentralCharge make_charge(const Quiver& q, const std::string& theta, const std::string& rho) {
    std::vector<Rational> t = parse_rational_vector(theta);
    std::vector<Rational> p = rho.empty() ? std::vector<Rational>(t.size(), Rational(1)) : parse_rational_vector(rho);
    if (static_cast<int>(t.size()) != q.vertex_count() || static_cast<int>(p.size()) != q.vertex_count()) {
        throw RankMismatch("charge vectors must have " + std::to_string(q.vertex_count()) + " entries");
    }
    return CentralCharge(std::move(t), std::move(p));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DT invariants of quivers: stacky, rational and attractor invariants, wall-crossing, trees"};
    app.require_subcommand(1);

    std::string quiver_path;
    std::string theta;
    std::string rho;
    std::string theta2;
    std::string rho2;
    std::string gamma_text;
    std::string t_text;
    std::string format = "table";
    int bound = 0;
    int count = 0;
    int min_children = 2;
    bool quick = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    };
    auto add_bound = [&](CLI::App* cmd) {
        cmd->add_option("--bound", bound, "maximal total degree")->required()->check(CLI::PositiveNumber);
    };

    auto* dt = app.add_subcommand("dt", "rational DT invariants Abar_Z and Omega_bar_Z");
    dt->add_option("--quiver", quiver_path, "quiver file")->required();
    dt->add_option("--theta", theta, "theta as comma-separated rationals")->required();
    dt->add_option("--rho", rho, "rho (default all 1)");
    add_bound(dt);
    dt->add_option("--t", t_text, "evaluate through the attractor tree formula at this t");
    add_format(dt);

    auto* attractor = app.add_subcommand("attractor", "attractor invariants Abar_* and Omega_bar_*");
    attractor->add_option("--quiver", quiver_path, "quiver file")->required();
    add_bound(attractor);
    add_format(attractor);

    auto* wc = app.add_subcommand("wallcross", "Abar_Z' obtained from Abar_Z by wall-crossing");
    wc->add_option("--quiver", quiver_path, "quiver file")->required();
    wc->add_option("--theta", theta, "theta of Z")->required();
    wc->add_option("--rho", rho, "rho of Z (default all 1)");
    wc->add_option("--theta2", theta2, "theta of Z'")->required();
    wc->add_option("--rho2", rho2, "rho of Z' (default all 1)");
    add_bound(wc);
    add_format(wc);

    auto* flow = app.add_subcommand("flowtree", "Omega_bar_Z(gamma) by the flow tree formula");
    flow->add_option("--quiver", quiver_path, "quiver file")->required();
    flow->add_option("--theta", theta, "theta")->required();
    flow->add_option("--rho", rho, "rho (default all 1)");
    flow->add_option("--gamma", gamma_text, "dimension vector")->required();
    add_format(flow);

    auto* trees = app.add_subcommand("trees", "plane trees on n leaves");
    trees->add_option("--count", count, "number of leaves")->required()->check(CLI::PositiveNumber);
    trees->add_option("--min-children", min_children, "minimal children per internal vertex")
        ->check(CLI::Range(2, 1000));
    add_format(trees);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance battery");
    selftest->add_flag("--quick", quick, "small bounds (n <= 4)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*selftest) {
            AcceptanceOptions options;
            options.quick = quick;
            bool ok = true;
            for (const auto& r : run_acceptance(options, std::cout)) {
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        }
        if (*trees) {
            auto list = enumerate_trees(count, min_children);
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& t : list) {
                    arr.push_back(t.to_string());
                }
                std::cout << nlohmann::json{{"count", list.size()}, {"trees", arr}}.dump(2) << '\n';
            } else if (format == "csv") {
                std::cout << "index,tree\n";
                for (std::size_t i = 0; i < list.size(); ++i) {
                    std::cout << i + 1 << ',' << csv_field(list[i].to_string()) << '\n';
                }
            } else {
                for (const auto& t : list) {
                    std::cout << t.to_string() << '\n';
                }
                std::cout << list.size() << " trees\n";
            }
            return 0;
        }

        const Quiver q = Quiver::load(quiver_path);
        const OneCollection a = stacky_A(q);
        const int r = q.vertex_count();
        if (*dt) {
            CentralCharge z = make_charge(q, theta, rho);
            if (t_text.empty()) {
                render(table(rational_dt(a, z, bound), r, bound), format, std::cout);
            } else {
                OneCollection abar_star = attractor_dt(a, q.skew_form(), bound);
                OneCollection c = attractor_tree_eval(abar_star, z, q.skew_form(), Rational::parse(t_text), bound);
                render(table(c, r, bound), format, std::cout);
            }
        } else if (*attractor) {
            render(table(attractor_dt(a, q.skew_form(), bound), r, bound), format, std::cout);
        } else if (*wc) {
            CentralCharge z = make_charge(q, theta, rho);
            CentralCharge z2 = make_charge(q, theta2, rho2);
            render(table(wallcross(rational_dt(a, z, bound), z, z2, bound), r, bound), format, std::cout);
        } else if (*flow) {
            CentralCharge z = make_charge(q, theta, rho);
            DimVector gamma = DimVector::parse(gamma_text);
            if (gamma.rank() != r) {
                throw RankMismatch("gamma must have " + std::to_string(r) + " entries");
            }
            if (!gamma.in_semigroup()) {
                throw ZeroVector("gamma must be nonzero");
            }
            const int b = gamma.total_degree();
            OneCollection abar_star = attractor_dt(a, q.skew_form(), b);
            DegreeFunction omega_star = [abar_star](const DimVector& g) { return omega_bar(abar_star(g)); };
            RatFunc omega = flow_tree_dt(omega_star, z, q.skew_form(), gamma);
            RatFunc coefficient = omega / RatFunc(LaurentPoly::monomial(Rational(1), -1) - LaurentPoly::y());
            render({{gamma, coefficient, omega}}, format, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "dtc: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
