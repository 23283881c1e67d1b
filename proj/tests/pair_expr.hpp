#pragma once

// Evaluates juxtaposition expressions such as "-b1((b2b3)a)+(b1a)(b2b3)"
// straight from the written definitions: a pair times a pair is the pair
// product, a pair times a vector is its left operator, a vector times a pair
// its right operator, two vectors multiply in A. Every product has exactly
// two factors, so parentheses carry all the grouping.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "galt/multiplier.hpp"

namespace support {

using namespace galt;

class PairExpr {
public:
    PairExpr(const Algebra& a, std::array<MultiplierPair, 3> b, Vector x) : alg_(a), b_(std::move(b)), x_(std::move(x)) {}

    struct Value {
        std::optional<MultiplierPair> pair;
        Vector vec;
    };

    /// Binds one of the letters x, y, z to a pair or a vector.
    void bind(char name, Value v) { vars_[static_cast<std::size_t>(name - 'x')] = std::move(v); }

    Value eval(std::string_view text)
    {
        src_.clear();
        for (char c : text)
            if (c != ' ' && c != '_' && c != '\\' && c != '{' && c != '}' && c != '$' && c != '\n')
                src_ += c;
        pos_ = 0;
        Value v = sum();
        if (pos_ != src_.size())
            throw std::runtime_error("trailing input at " + std::to_string(pos_) + " in " + src_);
        return v;
    }

    Vector vec(std::string_view text)
    {
        Value v = eval(text);
        if (v.pair)
            throw std::runtime_error("expression is a pair, not a vector");
        return v.vec;
    }

    MultiplierPair pair(std::string_view text)
    {
        Value v = eval(text);
        if (!v.pair)
            throw std::runtime_error("expression is a vector, not a pair");
        return *v.pair;
    }

private:
    bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }
    bool at_factor() const { return peek('b') || peek('a') || peek('(') || peek('x') || peek('y') || peek('z'); }

    Value combine(Value x, const Value& y, bool minus)
    {
        if (x.pair.has_value() != y.pair.has_value())
            throw std::runtime_error("adding a pair to a vector");
        if (x.pair)
            x.pair = minus ? *x.pair - *y.pair : *x.pair + *y.pair;
        else
            x.vec = minus ? x.vec - y.vec : x.vec + y.vec;
        return x;
    }

    Value sum()
    {
        bool minus = false;
        if (peek('+') || peek('-'))
            minus = src_[pos_++] == '-';
        Value acc = term();
        if (minus)
            acc = combine(negate_zero(acc), acc, true);
        while (peek('+') || peek('-')) {
            bool m = src_[pos_++] == '-';
            acc = combine(acc, term(), m);
        }
        return acc;
    }

    Value negate_zero(const Value& v)
    {
        Value z;
        if (v.pair)
            z.pair = zero_pair(alg_.field(), alg_.dim());
        else
            z.vec = alg_.zero_vector();
        return z;
    }

    Value term()
    {
        Value x = factor();
        if (!at_factor())
            return x;
        Value y = factor();
        if (at_factor())
            throw std::runtime_error("three juxtaposed factors in " + src_);
        return mul(x, y);
    }

    Value factor()
    {
        if (peek('(')) {
            ++pos_;
            Value v = sum();
            if (!peek(')'))
                throw std::runtime_error("missing ')' in " + src_);
            ++pos_;
            return v;
        }
        if (peek('x') || peek('y') || peek('z')) {
            const auto& v = vars_[static_cast<std::size_t>(src_[pos_++] - 'x')];
            if (!v)
                throw std::runtime_error("unbound letter in " + src_);
            return *v;
        }
        if (peek('a')) {
            ++pos_;
            return Value{std::nullopt, x_};
        }
        if (peek('b') && pos_ + 1 < src_.size() && src_[pos_ + 1] >= '1' && src_[pos_ + 1] <= '3') {
            std::size_t i = static_cast<std::size_t>(src_[pos_ + 1] - '1');
            pos_ += 2;
            return Value{b_[i], {}};
        }
        throw std::runtime_error("unexpected input at " + std::to_string(pos_) + " in " + src_);
    }

    Value mul(const Value& x, const Value& y)
    {
        if (x.pair && y.pair)
            return Value{pair_mul(*x.pair, *y.pair), {}};
        if (x.pair)
            return Value{std::nullopt, x.pair->left.apply(y.vec)};
        if (y.pair)
            return Value{std::nullopt, y.pair->right.apply(x.vec)};
        return Value{std::nullopt, alg_.multiply(x.vec, y.vec)};
    }

    const Algebra& alg_;
    std::array<MultiplierPair, 3> b_;
    Vector x_;
    std::array<std::optional<Value>, 3> vars_;
    std::string src_;
    std::size_t pos_ = 0;
};

}  // namespace support
