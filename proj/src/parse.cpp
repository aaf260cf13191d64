#include "qsep/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qsep {

namespace {

constexpr double kNormWarnTolerance = 1e-9;

struct Term {
    Complex coefficient;
    std::vector<int> digits;
    std::size_t ket_pos;  // offset of the '|' introducing the ket
};

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    std::vector<Term> run() {
        skip_ws();
        if (eof()) fail(0, "empty expression");
        std::vector<Term> terms;
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
            sign = (take() == '-') ? -1.0 : 1.0;
        }
        while (true) {
            Term t = parse_term();
            t.coefficient *= sign;
            terms.push_back(std::move(t));
            skip_ws();
            if (eof()) break;
            const char c = take();
            if (c == '+') {
                sign = 1.0;
            } else if (c == '-') {
                sign = -1.0;
            } else {
                fail(pos_ - 1, "expected '+' or '-' between terms");
            }
        }
        return terms;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return eof() ? '\0' : src_[pos_]; }
    char take() { return src_[pos_++]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (eof() || peek() != c) fail(pos_, std::string("expected ") + what);
        ++pos_;
    }

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
        throw ParseError(msg, at);
    }

    Term parse_term() {
        skip_ws();
        Complex coeff(1.0, 0.0);
        if (peek() != '|') {
            coeff = parse_coeff();
            skip_ws();
            if (peek() == '*') ++pos_;  // optional separator before the ket
        }
        skip_ws();
        if (peek() != '|') fail(pos_, "expected ket");
        Term t;
        t.ket_pos = pos_;
        ++pos_;  // '|'
        skip_ws();
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            t.digits.push_back(take() - '0');
            skip_ws();
        }
        if (t.digits.empty()) fail(pos_, "expected basis digit");
        expect('>', "'>' closing the ket");
        t.coefficient = coeff;
        return t;
    }

    // coeff = factor { ("*" | "/") factor } ; a trailing '*' that
    // introduces the ket is left for parse_term.
    Complex parse_coeff() {
        Complex value = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                const std::size_t mark = pos_;
                ++pos_;
                skip_ws();
                if (peek() == '|') {
                    pos_ = mark;
                    break;
                }
                value *= parse_factor();
            } else if (peek() == '/') {
                const std::size_t at = pos_;
                ++pos_;
                const Complex rhs = parse_factor();
                if (std::abs(rhs) == 0.0) fail(at, "division by zero");
                value /= rhs;
            } else {
                break;
            }
        }
        return value;
    }

    Complex parse_factor() {
        skip_ws();
        if (eof()) fail(pos_, "expected coefficient");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Complex(static_cast<double>(parse_integer()), 0.0);
        }
        if (c == 'i') {
            ++pos_;
            return Complex(0.0, 1.0);
        }
        if (c == 's') {
            if (src_.substr(pos_, 5) != "sqrt(") {
                fail(pos_, "expected 'sqrt('");
            }
            pos_ += 5;
            const long long n = parse_integer();
            expect(')', "')' closing sqrt");
            return Complex(std::sqrt(static_cast<double>(n)), 0.0);
        }
        if (c == '(') {
            ++pos_;
            Complex sum = parse_coeff();
            while (true) {
                skip_ws();
                if (peek() == '+') {
                    ++pos_;
                    sum += parse_coeff();
                } else if (peek() == '-') {
                    ++pos_;
                    sum -= parse_coeff();
                } else {
                    break;
                }
            }
            expect(')', "')' closing the parenthesized sum");
            return sum;
        }
        fail(pos_, "expected coefficient (integer, sqrt(n), i, or parenthesized sum)");
    }

    long long parse_integer() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail(pos_, "expected integer");
        }
        const std::size_t start = pos_;
        long long value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (pos_ - start >= 18) fail(start, "integer literal too large");
            value = value * 10 + (take() - '0');
        }
        return value;
    }
};

}  // namespace

ParseResult parse_state(std::string_view expr, std::optional<int> dim) {
    if (dim && *dim < 2) throw std::invalid_argument("dim must be >= 2");

    Parser parser(expr);
    const std::vector<Term> terms = parser.run();

    const std::size_t n_sites = terms.front().digits.size();
    int max_digit = 0;
    for (const Term& t : terms) {
        if (t.digits.size() != n_sites) {
            throw ParseError("inconsistent ket length (expected " +
                                 std::to_string(n_sites) + " digits)",
                             t.ket_pos);
        }
        for (int digit : t.digits) {
            if (dim && digit >= *dim) {
                throw ParseError("digit " + std::to_string(digit) +
                                     " out of range for dimension " + std::to_string(*dim),
                                 t.ket_pos);
            }
            max_digit = std::max(max_digit, digit);
        }
    }

    const int d = dim ? *dim : std::max(2, max_digit + 1);
    double size_check = 1.0;
    for (std::size_t i = 0; i < n_sites; ++i) size_check *= d;
    if (size_check > 1e6) {
        throw ParseError("state exceeds the 10^6 amplitude cap", expr.size());
    }

    const Eigen::Index total = static_cast<Eigen::Index>(size_check);
    Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(total);
    for (const Term& t : terms) {
        Eigen::Index index = 0;
        for (int digit : t.digits) index = index * d + digit;
        amplitudes[index] += t.coefficient;
    }

    const double norm = amplitudes.norm();
    if (norm < kZeroAmplitude) {
        throw ParseError("zero vector after combining terms", expr.size());
    }

    std::vector<std::string> warnings;
    if (std::abs(norm - 1.0) > kNormWarnTolerance) {
        warnings.emplace_back(kWarnNormalizedInput);
    }

    return ParseResult{PureState(std::vector<int>(n_sites, d), std::move(amplitudes)),
                       std::move(warnings)};
}

namespace {

struct RealRender {
    std::string text;
    double value;
};

std::string format_fraction(long long p, long long q) {
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

bool close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(1.0, std::abs(a));
}

// p/q with a small denominator, when one matches tightly.
std::optional<RealRender> try_small_rational(double m) {
    for (long long q = 1; q <= 64; ++q) {
        const long long p = std::llround(m * static_cast<double>(q));
        if (p <= 0) continue;
        const double value = static_cast<double>(p) / static_cast<double>(q);
        if (close(m, value, 1e-13)) return RealRender{format_fraction(p, q), value};
    }
    return std::nullopt;
}

// sqrt(n)/r when m^2 is a tight small rational p/q.
std::optional<RealRender> try_sqrt_form(double m) {
    const double x = m * m;
    for (long long q = 1; q <= 64; ++q) {
        const long long p = std::llround(x * static_cast<double>(q));
        if (p <= 0 || p > 1000000) continue;
        if (!close(x, static_cast<double>(p) / static_cast<double>(q), 1e-13)) continue;

        const long long root = std::llround(std::sqrt(static_cast<double>(q)));
        std::string text;
        double value;
        if (root * root == q) {
            value = std::sqrt(static_cast<double>(p)) / static_cast<double>(root);
            text = "sqrt(" + std::to_string(p) + ")";
            if (root != 1) text += "/" + std::to_string(root);
        } else {
            value = std::sqrt(static_cast<double>(p * q)) / static_cast<double>(q);
            text = "sqrt(" + std::to_string(p * q) + ")/" + std::to_string(q);
        }
        if (close(m, value, 1e-13)) return RealRender{std::move(text), value};
    }
    return std::nullopt;
}

// Continued-fraction convergent accurate to 1e-14.
RealRender fraction_fallback(double m) {
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = m;
    for (int iteration = 0; iteration < 48; ++iteration) {
        const double af = std::floor(x);
        if (af > 1e15) break;
        const long long a = static_cast<long long>(af);
        const __int128 p2 = static_cast<__int128>(a) * p1 + p0;
        const __int128 q2 = static_cast<__int128>(a) * q1 + q0;
        if (q2 > 1000000000000000LL || p2 > 1000000000000000000LL) break;
        p0 = p1;
        q0 = q1;
        p1 = static_cast<long long>(p2);
        q1 = static_cast<long long>(q2);
        if (q1 > 0) {
            const double value = static_cast<double>(p1) / static_cast<double>(q1);
            if (std::abs(m - value) <= 1e-14) {
                return RealRender{format_fraction(p1, q1), value};
            }
        }
        const double frac = x - af;
        if (frac < 1e-18) break;
        x = 1.0 / frac;
    }
    const long long q = 1000000000000000LL;
    const long long p = std::llround(m * static_cast<double>(q));
    return RealRender{format_fraction(p, q),
                      static_cast<double>(p) / static_cast<double>(q)};
}

RealRender render_real(double m) {
    if (auto r = try_small_rational(m)) return *r;
    if (auto r = try_sqrt_form(m)) return *r;
    return fraction_fallback(m);
}

struct CoeffRender {
    bool negative;
    std::string body;  // empty means a plain coefficient of 1
};

CoeffRender render_coeff(Complex c) {
    const double mag = std::abs(c);
    const double re = c.real();
    const double im = c.imag();

    if (std::abs(im) <= 1e-14 * mag) {
        RealRender r = render_real(std::abs(re));
        return CoeffRender{re < 0, r.text == "1" ? std::string() : std::move(r.text)};
    }
    if (std::abs(re) <= 1e-14 * mag) {
        RealRender r = render_real(std::abs(im));
        return CoeffRender{im < 0, r.text == "1" ? "i" : r.text + "*i"};
    }

    // Mixed: pull the sign of the real part out to the term level.
    const bool negative = re < 0;
    const double imag_inner = negative ? -im : im;
    RealRender ra = render_real(std::abs(re));
    RealRender rb = render_real(std::abs(imag_inner));
    const std::string imag_text = rb.text == "1" ? "i" : rb.text + "*i";
    return CoeffRender{negative, "(" + ra.text + (imag_inner >= 0 ? " + " : " - ") +
                                     imag_text + ")"};
}

}  // namespace

std::string render_state(const PureState& state) {
    for (int d : state.dims()) {
        if (d > 10) {
            throw std::invalid_argument(
                "cannot render local dimensions above 10 (single-digit kets)");
        }
    }
    std::string out;
    bool first = true;
    for (const BasisComponent& comp : components(state)) {
        CoeffRender cr = render_coeff(comp.coefficient);
        if (first) {
            if (cr.negative) out += "-";
            first = false;
        } else {
            out += cr.negative ? " - " : " + ";
        }
        out += cr.body;
        out += '|';
        for (int digit : comp.digits) out += static_cast<char>('0' + digit);
        out += '>';
    }
    return out;
}

}  // namespace qsep
