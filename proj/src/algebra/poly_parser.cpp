#include <starq/algebra/poly_parser.hpp>

#include <cctype>

#include <starq/error.hpp>

namespace starq
{

namespace
{

class parser
{
public:
    parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    Poly run()
    {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return p;
    }

private:
    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &what) const
    {
        throw parse_error(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr()
    {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        Poly acc = term();
        if (negate) {
            acc = -acc;
        }
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term()
    {
        Poly acc = factor();
        while (true) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                const Poly d = factor();
                if (!d.is_constant() || d.is_zero()) {
                    fail("division by a non-constant or zero expression");
                }
                acc *= GaussianRational(1) / d.constant_term();
            } else {
                return acc;
            }
        }
    }

    Poly factor()
    {
        Poly base = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected a non-negative integer exponent");
            }
            const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (e > 64) {
                fail("exponent too large");
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom()
    {
        skip_ws();
        const std::size_t dim = names_.size();
        if (pos_ >= text_.size()) {
            fail("unexpected end of expression");
        }
        if (accept('(')) {
            Poly p = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return p;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
                ++pos_;
            }
            return Poly(dim, GaussianRational(mpq_class(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view ident = text_.substr(start, pos_ - start);
            for (std::size_t k = 0; k < dim; ++k) {
                if (names_[k] == ident) {
                    return Poly::coordinate(dim, k);
                }
            }
            if (ident == "i") {
                return Poly(dim, GaussianRational::i());
            }
            pos_ = start;
            fail("unknown identifier '" + std::string(ident) + "'");
        }
        fail("unexpected character");
    }
};

} // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> names)
{
    return parser(text, names).run();
}

} // namespace starq
