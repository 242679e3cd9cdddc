#include "dtc/quiver.hpp"

#include <fstream>
#include <sstream>

namespace dtc {

Quiver::Quiver(int vertex_count, std::vector<std::pair<int, int>> arrows)
    : r_(vertex_count), arrows_(std::move(arrows)) {
    if (r_ < 1) {
        throw std::invalid_argument("a quiver needs at least one vertex");
    }
    euler_.assign(static_cast<std::size_t>(r_), std::vector<int>(static_cast<std::size_t>(r_), 0));
    for (int i = 0; i < r_; ++i) {
        euler_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    }
    for (auto [s, t] : arrows_) {
        if (s < 1 || s > r_ || t < 1 || t > r_) {
            throw std::invalid_argument("arrow " + std::to_string(s) + " -> " + std::to_string(t) +
                                        " leaves the vertex range 1.." + std::to_string(r_));
        }
        euler_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - 1)] -= 1;
    }
}

Quiver Quiver::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int vertices = -1;
    std::vector<std::pair<int, int>> arrows;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) {
            continue;
        }
        auto bad = [&](const std::string& why) {
            return ParseError("quiver line " + std::to_string(line_no) + ": " + why);
        };
        if (word == "vertices") {
            if (vertices != -1) {
                throw bad("duplicate 'vertices' line");
            }
            if (!(ls >> vertices) || vertices < 1) {
                throw bad("expected a positive vertex count");
            }
        } else if (word == "arrow") {
            if (vertices == -1) {
                throw bad("'arrow' before 'vertices'");
            }
            int s = 0;
            int t = 0;
            if (!(ls >> s >> t)) {
                throw bad("expected 'arrow <i> <j>'");
            }
            if (s < 1 || s > vertices || t < 1 || t > vertices) {
                throw bad("arrow endpoint outside 1.." + std::to_string(vertices));
            }
            arrows.emplace_back(s, t);
        } else {
            throw bad("unknown keyword '" + word + "'");
        }
        std::string extra;
        if (ls >> extra) {
            throw bad("trailing text '" + extra + "'");
        }
    }
    if (vertices == -1) {
        throw ParseError("quiver has no 'vertices' line");
    }
    return Quiver(vertices, std::move(arrows));
}

Quiver Quiver::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open quiver file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

Quiver Quiver::kronecker(int m) {
    return Quiver(2, std::vector<std::pair<int, int>>(static_cast<std::size_t>(m), {1, 2}));
}

Quiver Quiver::loops(int m) {
    return Quiver(1, std::vector<std::pair<int, int>>(static_cast<std::size_t>(m), {1, 1}));
}

long long Quiver::euler_form(const DimVector& a, const DimVector& b) const {
    if (a.rank() != r_ || b.rank() != r_) {
        throw RankMismatch("dimension vector rank differs from the quiver's vertex count");
    }
    long long s = 0;
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < r_; ++j) {
            s += static_cast<long long>(a[i]) * euler_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * b[j];
        }
    }
    return s;
}

SkewForm Quiver::skew_form() const {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(r_), std::vector<int>(static_cast<std::size_t>(r_)));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            m[i][j] = euler_[i][j] - euler_[j][i];
        }
    }
    return SkewForm(std::move(m));
}

long long Quiver::representation_dimension(const DimVector& gamma) const {
    if (gamma.rank() != r_) {
        throw RankMismatch("dimension vector rank differs from the quiver's vertex count");
    }
    long long d = 0;
    for (auto [s, t] : arrows_) {
        d += static_cast<long long>(gamma[s - 1]) * gamma[t - 1];
    }
    return d;
}

LaurentPoly poincare_gl(int n) {
    if (n < 0) {
        throw std::invalid_argument("GL_n needs n >= 0");
    }
    LaurentPoly p(1);
    for (int k = 0; k < n; ++k) {
        p *= LaurentPoly::monomial(Rational(1), 2 * n) - LaurentPoly::monomial(Rational(1), 2 * k);
    }
    return p;
}

OneCollection stacky_A(const Quiver& q) {
    return OneCollection("A", q.skew_form(), [q](const DimVector& gamma) {
        LaurentPoly den(1);
        for (int e : gamma.entries()) {
            den *= poincare_gl(e);
        }
        RatFunc num = RatFunc::neg_y_power(static_cast<int>(q.euler_form(gamma, gamma))) *
                      RatFunc(LaurentPoly::monomial(Rational(1), static_cast<int>(2 * q.representation_dimension(gamma))));
        return num / RatFunc(den);
    });
}

} // namespace dtc
