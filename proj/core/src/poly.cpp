#include "singhodge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace singhodge {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    const std::optional<std::vector<std::string>>& names;
    int max_index = 0;  // highest variable index seen (1-based)

    explicit Parser(const std::string& t, const std::optional<std::vector<std::string>>& nm)
        : text(t), names(nm) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        std::ostringstream os;
        os << msg << " at position " << pos;
        throw SyntaxError(os.str());
    }

    Int parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected number");
        Int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }

    // var := name from `names` | 'x' uint | 'x' | 'y' | 'z' | 'w'
    // Returns the 1-based variable index, or 0 if no variable starts here.
    int parse_var() {
        skip_ws();
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) return 0;
        if (names) {
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            const std::string id = text.substr(start, pos - start);
            for (std::size_t i = 0; i < names->size(); ++i) {
                if ((*names)[i] == id) return static_cast<int>(i) + 1;
            }
            fail("unknown variable '" + id + "'");
        }
        const char c = text[pos];
        int index = 0;
        switch (c) {
            case 'x': index = 1; break;
            case 'y': index = 2; break;
            case 'z': index = 3; break;
            case 'w': index = 4; break;
            default: fail(std::string("unknown variable '") + c + "'");
        }
        ++pos;
        if (c == 'x' && pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const Int k = parse_uint();
            if (k < 1) fail("variable indices start at x1");
            index = static_cast<int>(k);
        }
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("variables must be separated by '*'");
        max_index = std::max(max_index, index);
        return index;
    }

    // factor := var ('^' uint)?   Accumulates into the exponent map.
    void parse_factor(std::map<int, Exponent>& exps) {
        const int index = parse_var();
        if (index == 0) fail("expected variable");
        Exponent e = 1;
        if (accept('^')) {
            const Int k = parse_uint();
            e = static_cast<Exponent>(k);
        }
        exps[index] += e;
    }

    // term := coeff ('*'? factor ('*' factor)*)? | factor ('*' factor)*
    // Bare coefficients are constant terms (rejected later unless they cancel).
    void parse_term(Rational sign, std::map<std::map<int, Exponent>, Rational>& acc) {
        skip_ws();
        Rational coeff = 1;
        bool saw_coeff = false;
        if (pos < text.size() &&
            (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-' || text[pos] == '+')) {
            bool neg = false;
            if (text[pos] == '-' || text[pos] == '+') {
                neg = text[pos] == '-';
                ++pos;
                skip_ws();
            }
            Int num = parse_uint();
            Int den = 1;
            if (accept('/')) {
                den = parse_uint();
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(num, den);
            if (neg) coeff = -coeff;
            saw_coeff = true;
        }
        std::map<int, Exponent> exps;
        skip_ws();
        const bool star_after_coeff = saw_coeff && accept('*');
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            parse_factor(exps);
            while (accept('*')) parse_factor(exps);
        } else if (star_after_coeff) {
            fail("expected variable after '*'");
        } else if (!saw_coeff) {
            fail("expected term");
        }
        acc[exps] += sign * coeff;
    }

    std::map<std::map<int, Exponent>, Rational> parse_poly() {
        std::map<std::map<int, Exponent>, Rational> acc;
        Rational sign = 1;
        if (accept('-')) sign = -1;
        else accept('+');
        parse_term(sign, acc);
        while (!eof()) {
            if (accept('+')) sign = 1;
            else if (accept('-')) sign = -1;
            else fail("expected '+' or '-'");
            parse_term(sign, acc);
        }
        return acc;
    }
};

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text,
                                  const std::optional<std::vector<std::string>>& variable_names) {
    Parser parser(text, variable_names);
    if (parser.eof()) throw SyntaxError("empty input");
    const auto acc = parser.parse_poly();

    int n = variable_names ? static_cast<int>(variable_names->size()) : parser.max_index;
    if (n == 0) n = 1;  // only constant terms appeared; rejected below anyway

    SparsePolynomial p;
    p.n = n;
    for (const auto& [exps, coeff] : acc) {
        if (coeff == 0) continue;
        ExponentVector alpha(n, 0);
        for (const auto& [index, e] : exps) alpha[index - 1] = e;
        p.terms[alpha] += coeff;
        if (p.terms[alpha] == 0) p.terms.erase(alpha);
    }
    const ExponentVector origin(n, 0);
    if (auto it = p.terms.find(origin); it != p.terms.end())
        throw NonzeroConstantTerm("f(0) = " + it->second.str() + " != 0");
    if (p.terms.empty()) throw EmptyPolynomial("all terms cancel");
    return p;
}

namespace {

std::string variable_name(int index, int n) {
    static const char* letters[] = {"x", "y", "z", "w"};
    if (n <= 4) return letters[index];
    return "x" + std::to_string(index + 1);
}

}  // namespace

std::string to_string(const SparsePolynomial& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, coeff] : p.terms) {
        const Rational c = coeff < 0 ? Rational(-coeff) : coeff;
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (int i = 0; i < p.n; ++i) {
            if (alpha[i] == 0) continue;
            std::string f = variable_name(i, p.n);
            if (alpha[i] > 1) f += "^" + std::to_string(alpha[i]);
            factors.push_back(f);
        }
        const bool show_coeff = factors.empty() || c != 1;
        if (show_coeff) os << c.str();
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0 || show_coeff) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

std::set<ExponentVector> support(const SparsePolynomial& p) {
    std::set<ExponentVector> s;
    for (const auto& [alpha, coeff] : p.terms) s.insert(alpha);
    return s;
}

bool has_linear_term(const SparsePolynomial& p) {
    for (const auto& [alpha, coeff] : p.terms) {
        const Exponent total = std::accumulate(alpha.begin(), alpha.end(), Exponent(0));
        if (total == 1) return true;
    }
    return false;
}

SparsePolynomial restrict_to_face(const SparsePolynomial& p, const Face& f) {
    bool touched = false;
    for (const auto& [alpha, coeff] : p.terms) {
        const Int v = dot(f.normal, alpha);
        if (v < f.offset) throw FaceMismatch("face hyperplane is not supporting for the support of p");
        if (v == f.offset) touched = true;
    }
    if (!touched) throw FaceMismatch("face hyperplane does not touch the support of p");
    SparsePolynomial q;
    q.n = p.n;
    for (const auto& [alpha, coeff] : p.terms) {
        if (f.on_face(alpha)) q.terms.emplace(alpha, coeff);
    }
    return q;
}

}  // namespace singhodge
