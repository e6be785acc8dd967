#include "ddpoly/opparse.hpp"

#include <cctype>
#include <optional>

namespace ddpoly {

namespace {

struct Value {
    enum class Kind { scalar, op, element } kind = Kind::scalar;
    RatFunc scalar;
    std::optional<OreOperator> op;
    std::optional<ModuleElement> element;
};

class ExprParser {
public:
    ExprParser(const std::string& text, FieldPtr field, int rank, int line)
        : text_(text), field_(std::move(field)), rank_(rank), line_(line) {
        sig_ = field_->signature();
    }

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(
                                          text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Value expr() {
        bool negate = eat('-');
        Value acc = term();
        if (negate) acc = negated(acc);
        while (true) {
            if (eat('+')) {
                acc = add(acc, term(), false);
            } else if (eat('-')) {
                acc = add(acc, term(), true);
            } else {
                return acc;
            }
        }
    }

    Value term() {
        Value acc = factor();
        while (true) {
            if (eat('*')) {
                acc = multiply(acc, factor());
            } else if (eat('/')) {
                Value d = factor();
                if (acc.kind != Value::Kind::scalar ||
                    d.kind != Value::Kind::scalar) {
                    fail("division is defined for scalars only");
                }
                if (d.scalar.is_zero()) fail("division by zero");
                acc.scalar = acc.scalar / d.scalar;
            } else {
                return acc;
            }
        }
    }

    Value factor() {
        bool negate = eat('-');
        Value v = powered();
        return negate ? negated(v) : v;
    }

    Value powered() {
        Value base = atom();
        if (!eat('^')) return base;
        bool neg = eat('-');
        skip_ws();
        size_t start = pos_;
        long long e = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("exponent expected after '^'");
        if (neg) {
            if (base.kind != Value::Kind::scalar) {
                fail("negative powers are defined for scalars only");
            }
            if (base.scalar.is_zero()) fail("inverse of zero");
            Value v;
            v.scalar = field_->one();
            for (long long i = 0; i < e; ++i) v.scalar = v.scalar * base.scalar;
            v.scalar = v.scalar.inverse();
            return v;
        }
        switch (base.kind) {
            case Value::Kind::scalar: {
                Value v;
                v.scalar = field_->one();
                for (long long i = 0; i < e; ++i) {
                    v.scalar = v.scalar * base.scalar;
                }
                return v;
            }
            case Value::Kind::op: {
                Value v;
                v.kind = Value::Kind::op;
                v.op = OreOperator::scalar(field_, field_->one());
                for (long long i = 0; i < e; ++i) v.op = *v.op * *base.op;
                return v;
            }
            case Value::Kind::element:
                fail("a generator marker cannot be raised to a power");
        }
        fail("unreachable");
    }

    Value atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer n = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                n = n * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            Value v;
            v.scalar = field_->constant(Rational(n));
            return v;
        }
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!eat(')')) fail("')' expected");
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name = text_.substr(start, pos_ - start);
            if (auto idx = marker_index(name, 'd')) {
                if (*idx >= sig_.derivations) fail("unknown derivation " + name);
                std::vector<int> k(sig_.derivations, 0), l(sig_.translations, 0);
                k[*idx] = 1;
                Value v;
                v.kind = Value::Kind::op;
                v.op = OreOperator::monomial(field_, Exponent::make(sig_, k, l),
                                             field_->one());
                return v;
            }
            if (auto idx = marker_index(name, 'a')) {
                if (*idx >= sig_.translations) fail("unknown translation " + name);
                std::vector<int> k(sig_.derivations, 0), l(sig_.translations, 0);
                l[*idx] = 1;
                Value v;
                v.kind = Value::Kind::op;
                v.op = OreOperator::monomial(field_, Exponent::make(sig_, k, l),
                                             field_->one());
                return v;
            }
            if (auto idx = marker_index(name, 'e')) {
                if (rank_ < 1) fail("generator markers are not allowed here");
                if (*idx >= rank_) fail("unknown generator " + name);
                Value v;
                v.kind = Value::Kind::element;
                v.element = ModuleElement::basis(field_, rank_, *idx);
                return v;
            }
            int vi = field_->var_index(name);
            if (vi < 0) fail("unknown indeterminate " + name);
            Value v;
            v.scalar = field_->indeterminate(vi);
            return v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    static std::optional<int> marker_index(const std::string& name, char stem) {
        if (name.size() < 2 || name[0] != stem) return std::nullopt;
        int idx = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
                return std::nullopt;
            }
            idx = idx * 10 + (name[i] - '0');
        }
        return idx - 1;  // names are 1-based
    }

    Value negated(Value v) const {
        switch (v.kind) {
            case Value::Kind::scalar:
                v.scalar = -v.scalar;
                return v;
            case Value::Kind::op:
                v.op = v.op->scaled(-field_->one());
                return v;
            case Value::Kind::element:
                v.element = v.element->scaled(-field_->one());
                return v;
        }
        fail("unreachable");
    }

    Value add(Value a, Value b, bool subtract) {
        if (subtract) b = negated(b);
        if (a.kind == Value::Kind::element || b.kind == Value::Kind::element) {
            if (a.kind != Value::Kind::element || b.kind != Value::Kind::element) {
                fail("cannot add a scalar or operator to a module element");
            }
            a.element = *a.element + *b.element;
            return a;
        }
        OreOperator oa = as_operator(a), ob = as_operator(b);
        Value v;
        v.kind = Value::Kind::op;
        v.op = oa + ob;
        if (v.op->terms().size() <= 1) demote(v);
        return v;
    }

    Value multiply(Value a, const Value& b) {
        if (a.kind == Value::Kind::element) {
            fail("a generator marker must end its term");
        }
        if (b.kind == Value::Kind::element) {
            Value v;
            v.kind = Value::Kind::element;
            v.element = as_operator(a) * *b.element;
            return v;
        }
        if (a.kind == Value::Kind::scalar && b.kind == Value::Kind::scalar) {
            a.scalar = a.scalar * b.scalar;
            return a;
        }
        Value v;
        v.kind = Value::Kind::op;
        v.op = as_operator(a) * as_operator(b);
        demote(v);
        return v;
    }

    OreOperator as_operator(const Value& v) const {
        if (v.kind == Value::Kind::op) return *v.op;
        return OreOperator::scalar(field_, v.scalar);
    }

    // keep pure scalars as scalars so '/' and '^-' stay available
    void demote(Value& v) const {
        if (v.kind != Value::Kind::op) return;
        if (v.op->is_zero()) {
            v.kind = Value::Kind::scalar;
            v.scalar = field_->zero();
            return;
        }
        if (v.op->terms().size() == 1 &&
            v.op->terms().begin()->first.is_zero()) {
            v.kind = Value::Kind::scalar;
            v.scalar = v.op->terms().begin()->second;
        }
    }

    const std::string& text_;
    FieldPtr field_;
    Signature sig_;
    int rank_;
    int line_;
    size_t pos_ = 0;
};

}  // namespace

OreOperator parse_operator(const std::string& text, const FieldPtr& field,
                           int line) {
    ExprParser p(text, field, 0, line);
    Value v = p.parse();
    switch (v.kind) {
        case Value::Kind::scalar:
            return OreOperator::scalar(field, v.scalar);
        case Value::Kind::op:
            return *v.op;
        default:
            throw ParseError("expected an operator, found a module element",
                             line, 1);
    }
}

ModuleElement parse_element(const std::string& text, const FieldPtr& field,
                            int rank, int line) {
    ExprParser p(text, field, rank, line);
    Value v = p.parse();
    if (v.kind != Value::Kind::element) {
        if (v.kind == Value::Kind::scalar && v.scalar.is_zero()) {
            return ModuleElement(field, rank);
        }
        throw ParseError("expected a module element with generator markers",
                         line, 1);
    }
    return *v.element;
}

}  // namespace ddpoly
