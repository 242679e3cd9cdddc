#include "dtc/stability.hpp"

#include <numeric>
#include <sstream>

namespace dtc {

namespace {

// Scales a rational vector by the lcm of its denominators. Returns nullopt
// unless every scaled entry is below 2^20, which keeps dot products with
// int entries (rank <= 64) inside 64 bits.
std::optional<std::vector<long long>> integer_scaled(const std::vector<Rational>& v) {
    mpz_class lcm = 1;
    for (const auto& q : v) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.denominator().get_mpz_t());
    }
    std::vector<long long> out;
    for (const auto& q : v) {
        mpz_class s = q.numerator() * (lcm / q.denominator());
        if (abs(s) >= mpz_class(1L << 20)) {
            return std::nullopt;
        }
        out.push_back(s.get_si());
    }
    return out;
}

} // namespace

std::vector<Rational> parse_rational_vector(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

CentralCharge::CentralCharge(std::vector<Rational> theta, std::vector<Rational> rho)
    : theta_(std::move(theta)), rho_(std::move(rho)) {
    if (theta_.size() != rho_.size()) {
        throw RankMismatch("theta and rho have different lengths");
    }
    if (theta_.empty()) {
        throw std::invalid_argument("central charge of rank zero");
    }
    for (const auto& r : rho_) {
        if (r.sign() <= 0) {
            throw std::invalid_argument("rho entries must be strictly positive");
        }
    }
    auto t = integer_scaled(theta_);
    auto r = integer_scaled(rho_);
    if (t && r && theta_.size() <= 64) {
        theta_int_ = std::move(*t);
        rho_int_ = std::move(*r);
    }
}

CentralCharge::CentralCharge(std::vector<Rational> theta)
    : CentralCharge(theta, std::vector<Rational>(theta.size(), Rational(1))) {}

Rational CentralCharge::theta_of(std::span<const int> a) const {
    Rational s;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != 0) {
            s += theta_[k] * Rational(a[k]);
        }
    }
    return s;
}

Rational CentralCharge::rho_of(std::span<const int> a) const {
    Rational s;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != 0) {
            s += rho_[k] * Rational(a[k]);
        }
    }
    return s;
}

std::weak_ordering CentralCharge::compare(std::span<const int> a, std::span<const int> b) const {
    const std::size_t r = theta_.size();
    if (a.size() != r || b.size() != r) {
        throw RankMismatch("vector rank differs from central charge rank");
    }
    if (!theta_int_.empty()) {
        const long long* t = theta_int_.data();
        const long long* p = rho_int_.data();
        long long ta = 0, ra = 0, tb = 0, rb = 0;
        int wide = 0;
        for (std::size_t k = 0; k < r; ++k) {
            wide |= (a[k] | b[k]) >> 20;
            ta += t[k] * a[k];
            ra += p[k] * a[k];
            tb += t[k] * b[k];
            rb += p[k] * b[k];
        }
        if (wide == 0) {
            __int128 lhs = static_cast<__int128>(ta) * rb;
            __int128 rhs = static_cast<__int128>(tb) * ra;
            return lhs < rhs ? std::weak_ordering::less
                   : lhs > rhs ? std::weak_ordering::greater
                               : std::weak_ordering::equivalent;
        }
    }
    Rational lhs = theta_of(a) * rho_of(b);
    Rational rhs = theta_of(b) * rho_of(a);
    auto c = lhs <=> rhs;
    return c < 0 ? std::weak_ordering::less : c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent;
}

std::string CentralCharge::to_string() const {
    std::string out = "theta=(";
    for (std::size_t i = 0; i < theta_.size(); ++i) {
        out += (i ? "," : "") + theta_[i].to_string();
    }
    out += ") rho=(";
    for (std::size_t i = 0; i < rho_.size(); ++i) {
        out += (i ? "," : "") + rho_[i].to_string();
    }
    return out + ")";
}

SkewForm::SkewForm(std::vector<std::vector<int>> matrix) : matrix_(std::move(matrix)) {
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        if (matrix_[i].size() != matrix_.size()) {
            throw std::invalid_argument("skew form matrix must be square");
        }
    }
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        for (std::size_t j = 0; j < matrix_.size(); ++j) {
            if (matrix_[i][j] != -matrix_[j][i]) {
                throw std::invalid_argument("skew form matrix must be antisymmetric");
            }
        }
    }
}

SkewForm SkewForm::zero(int rank) {
    return SkewForm(std::vector<std::vector<int>>(static_cast<std::size_t>(rank),
                                                  std::vector<int>(static_cast<std::size_t>(rank), 0)));
}

SkewForm SkewForm::parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss{std::string(text)};
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<int> entries;
        std::stringstream rs(row);
        std::string item;
        while (std::getline(rs, item, ',')) {
            try {
                std::size_t used = 0;
                entries.push_back(std::stoi(item, &used));
                if (item.find_first_not_of(' ', used) != std::string::npos) {
                    throw std::invalid_argument("trailing characters");
                }
            } catch (const std::exception&) {
                throw ParseError("malformed skew form '" + std::string(text) + "'");
            }
        }
        rows.push_back(std::move(entries));
    }
    try {
        return SkewForm(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
}

long long SkewForm::pair(std::span<const int> a, std::span<const int> b) const {
    if (a.size() != matrix_.size() || b.size() != matrix_.size()) {
        throw RankMismatch("vector rank differs from skew form rank");
    }
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        long long row = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            row += static_cast<long long>(matrix_[i][j]) * b[j];
        }
        s += row * a[i];
    }
    return s;
}

bool SkewForm::is_zero() const {
    for (const auto& row : matrix_) {
        for (int e : row) {
            if (e != 0) {
                return false;
            }
        }
    }
    return true;
}

CentralCharge self_stability(const SkewForm& form, const DimVector& gamma) {
    std::vector<Rational> theta;
    for (int k = 0; k < form.rank(); ++k) {
        theta.emplace_back(static_cast<long long>(form.pair(DimVector::unit(form.rank(), k), gamma)));
    }
    return CentralCharge(std::move(theta));
}

std::optional<std::pair<DimVector, DimVector>> genericity_witness(const CentralCharge& z, int bound) {
    if (bound < 1) {
        throw std::invalid_argument("genericity bound must be at least 1");
    }
    std::vector<DimVector> vs = vectors_up_to_degree(z.rank(), bound);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (z.compare(vs[i], vs[j]) == 0 && !proportional(vs[i], vs[j])) {
                return std::make_pair(vs[i], vs[j]);
            }
        }
    }
    return std::nullopt;
}

PerturbedScalar::PerturbedScalar(Rational constant, std::vector<Rational> eps_coeffs)
    : constant_(std::move(constant)), eps_(std::move(eps_coeffs)) {}

bool PerturbedScalar::is_zero() const {
    if (!constant_.is_zero()) {
        return false;
    }
    for (const auto& e : eps_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

int PerturbedScalar::strict_sign() const {
    if (!constant_.is_zero()) {
        return constant_.sign();
    }
    for (const auto& e : eps_) {
        if (!e.is_zero()) {
            return e.sign();
        }
    }
    throw NonGeneric("strict sign requested for an identically zero perturbed scalar");
}

PerturbedScalar PerturbedScalar::operator+(const PerturbedScalar& b) const {
    if (eps_.size() != b.eps_.size()) {
        throw std::invalid_argument("perturbed scalars of different eps dimension");
    }
    PerturbedScalar r = *this;
    r.constant_ += b.constant_;
    for (std::size_t i = 0; i < eps_.size(); ++i) {
        r.eps_[i] += b.eps_[i];
    }
    return r;
}

PerturbedScalar PerturbedScalar::operator-() const { return scaled(Rational(-1)); }

PerturbedScalar PerturbedScalar::operator-(const PerturbedScalar& b) const { return *this + (-b); }

PerturbedScalar PerturbedScalar::scaled(const Rational& c) const {
    PerturbedScalar r = *this;
    r.constant_ *= c;
    for (auto& e : r.eps_) {
        e *= c;
    }
    return r;
}

std::strong_ordering operator<=>(const PerturbedScalar& a, const PerturbedScalar& b) {
    if (a.eps_.size() != b.eps_.size()) {
        throw std::invalid_argument("perturbed scalars of different eps dimension");
    }
    if (auto c = a.constant_ <=> b.constant_; c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < a.eps_.size(); ++i) {
        if (auto c = a.eps_[i] <=> b.eps_[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::string PerturbedScalar::to_string() const {
    std::string out = constant_.to_string();
    for (std::size_t i = 0; i < eps_.size(); ++i) {
        if (!eps_[i].is_zero()) {
            out += (eps_[i].sign() < 0 ? " - " : " + ") + (eps_[i].sign() < 0 ? -eps_[i] : eps_[i]).to_string() +
                   "*eps" + std::to_string(i + 1);
        }
    }
    return out;
}

bool strictly_less(const PerturbedScalar& a, const PerturbedScalar& b) { return (b - a).strict_sign() > 0; }

} // namespace dtc
