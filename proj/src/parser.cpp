#include "abtaxon/parser.hpp"

#include <algorithm>
#include <cctype>

#include "abtaxon/errors.hpp"
#include "abtaxon/primality.hpp"

namespace abtaxon {

namespace {

constexpr std::uint64_t kMaxNat = 999'999'999;

enum class Tok { Plus, Caret, LParen, RParen, Semi, Comma, Nat, Name, Aleph, End };

struct Token {
    Tok kind;
    SourcePos pos;
    std::uint64_t number = 0;  // Nat value or Aleph index
    std::string text;          // Name spelling / lexeme for errors
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Plus: return "'+'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Semi: return "';'";
        case Tok::Comma: return "','";
        case Tok::Nat: return "a number";
        case Tok::Name: return "a name";
        case Tok::Aleph: return "a multiplicity";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        SourcePos pos = pos_;
        if (at_end()) return {Tok::End, pos, 0, "end of input"};

        unsigned char c = text_[i_];
        if (c == '+') return take(Tok::Plus, 1, pos);
        if (c == '^') return take(Tok::Caret, 1, pos);
        if (c == '(') return take(Tok::LParen, 1, pos);
        if (c == ')') return take(Tok::RParen, 1, pos);
        if (c == ';') return take(Tok::Semi, 1, pos);
        if (c == ',') return take(Tok::Comma, 1, pos);

        // Unicode aliases: direct-sum sign for '+', infinity sign for "inf".
        if (c >= 0x80) {
            if (match_utf8("\xe2\x8a\x95")) return {Tok::Plus, pos, 0, "+"};
            if (match_utf8("\xe2\x88\x9e")) return {Tok::Name, pos, 0, "inf"};
            throw ParseError(pos, "a token", "unrecognized character");
        }

        if (std::isdigit(c)) {
            std::uint64_t n = read_number(pos);
            return {Tok::Nat, pos, n, std::to_string(n)};
        }

        if (std::isalpha(c)) {
            std::string name;
            while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[i_]))) {
                name += text_[i_];
                advance();
            }
            if (name == "w") {
                // "w" = aleph_0; immediately adjacent digits give the index.
                std::uint64_t k = 0;
                if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                    k = read_number(pos);
                return {Tok::Aleph, pos, k, "w"};
            }
            return {Tok::Name, pos, 0, name};
        }

        throw ParseError(pos, "a token", std::string("'") + static_cast<char>(c) + "'");
    }

private:
    bool at_end() const { return i_ >= text_.size(); }

    void advance() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++i_;
    }

    void skip_ws() {
        while (!at_end() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\r' ||
                             text_[i_] == '\n'))
            advance();
    }

    Token take(Tok kind, std::size_t len, SourcePos pos) {
        std::string lexeme(text_.substr(i_, len));
        for (std::size_t j = 0; j < len; ++j) advance();
        return {kind, pos, 0, lexeme};
    }

    bool match_utf8(std::string_view bytes) {
        if (text_.substr(i_, bytes.size()) != bytes) return false;
        i_ += bytes.size();
        ++pos_.column;
        return true;
    }

    std::uint64_t read_number(SourcePos pos) {
        std::uint64_t n = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
            n = n * 10 + static_cast<std::uint64_t>(text_[i_] - '0');
            if (n > kMaxNat)
                throw ParseError(pos, "a number <= " + std::to_string(kMaxNat),
                                 "a larger number");
            advance();
        }
        return n;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    SourcePos pos_{1, 1};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    GroupExpr parse() {
        // "0" alone denotes the zero group.
        if (cur_.kind == Tok::Nat && cur_.number == 0) {
            shift();
            expect(Tok::End);
            return GroupExpr{};
        }
        std::vector<Term> terms;
        terms.push_back(parse_term());
        while (cur_.kind == Tok::Plus) {
            shift();
            terms.push_back(parse_term());
        }
        expect(Tok::End);
        return normalize(std::move(terms));
    }

private:
    void shift() { cur_ = lexer_.next(); }

    void expect(Tok kind) {
        if (cur_.kind != kind) fail(tok_name(kind));
        shift();
    }

    [[noreturn]] void fail(const std::string& expected, const std::string& hint = {}) {
        throw ParseError(cur_.pos, expected, cur_.text, hint);
    }

    std::uint64_t expect_nat(const char* what) {
        if (cur_.kind != Tok::Nat) fail(what);
        std::uint64_t n = cur_.number;
        shift();
        return n;
    }

    std::uint64_t expect_prime(const char* what) {
        SourcePos pos = cur_.pos;
        std::uint64_t p = expect_nat(what);
        if (!is_prime(p))
            throw ParseError(pos, what, std::to_string(p),
                             p < 2 ? "not a prime" : factorization_text(p));
        return p;
    }

    Term parse_term() {
        Atom atom = parse_atom();
        Cardinal mult = Cardinal::finite(1);
        if (cur_.kind == Tok::Caret) {
            shift();
            mult = parse_mult();
        }
        return Term{std::move(atom), mult};
    }

    Cardinal parse_mult() {
        if (cur_.kind == Tok::Nat) {
            if (cur_.number == 0) fail("a multiplicity >= 1");
            std::uint64_t n = cur_.number;
            shift();
            return Cardinal::finite(n);
        }
        if (cur_.kind == Tok::Aleph) {
            auto k = static_cast<std::uint32_t>(cur_.number);
            shift();
            return Cardinal::aleph(k);
        }
        fail("a multiplicity (number, 'w' or 'wk')");
    }

    Atom parse_atom() {
        if (cur_.kind != Tok::Name) fail("an atom (Z, Q, Z(p^k), Z(p^inf), B(p), TF(r;...))");
        std::string name = cur_.text;
        SourcePos pos = cur_.pos;
        shift();

        if (name == "Q") return Rational{};
        if (name == "Z") {
            if (cur_.kind != Tok::LParen) return FreeZ{};
            shift();
            std::uint64_t p = expect_prime("a prime");
            if (cur_.kind == Tok::RParen) {  // Z(p) is shorthand for Z(p^1)
                shift();
                return Cyclic{p, 1};
            }
            expect(Tok::Caret);
            if (cur_.kind == Tok::Name && cur_.text == "inf") {
                shift();
                expect(Tok::RParen);
                return Prufer{p};
            }
            SourcePos kpos = cur_.pos;
            std::uint64_t k = expect_nat("an exponent or 'inf'");
            if (k == 0) throw ParseError(kpos, "an exponent >= 1 or 'inf'", "0");
            expect(Tok::RParen);
            return Cyclic{p, static_cast<std::uint32_t>(k)};
        }
        if (name == "B") {
            expect(Tok::LParen);
            std::uint64_t p = expect_prime("a prime");
            expect(Tok::RParen);
            return UnboundedDsc{p};
        }
        if (name == "TF") {
            expect(Tok::LParen);
            SourcePos rpos = cur_.pos;
            std::uint64_t rank = expect_nat("a rank");
            if (rank == 0) throw ParseError(rpos, "a rank >= 1", "0");
            std::vector<std::uint64_t> primes;
            if (cur_.kind == Tok::Semi) {
                shift();
                primes.push_back(expect_prime("a prime"));
                while (cur_.kind == Tok::Comma) {
                    shift();
                    primes.push_back(expect_prime("a prime"));
                }
            }
            expect(Tok::RParen);
            std::sort(primes.begin(), primes.end());
            primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
            return TorsionFreeFiniteRank{static_cast<std::uint32_t>(rank), std::move(primes)};
        }
        throw ParseError(pos, "an atom (Z, Q, Z(p^k), Z(p^inf), B(p), TF(r;...))", name);
    }

    Lexer lexer_;
    Token cur_{Tok::End, {1, 1}, 0, ""};
};

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string render_term(const Term& t) {
    std::string s = atom_text(t.atom);
    if (t.multiplicity != Cardinal::finite(1)) s += "^" + t.multiplicity.str();
    return s;
}

std::string render(const GroupExpr& g) {
    if (g.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < g.terms().size(); ++i) {
        if (i > 0) s += " + ";
        s += render_term(g.terms()[i]);
    }
    return s;
}

}  // namespace abtaxon
