#include "birkhoff/rational.hpp"

#include <stdexcept>

namespace birkhoff {

namespace {

bool is_integer_text(std::string_view text) {
    std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (start == text.size()) {
        return false;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_text(num_text)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Integer num(std::string(num_text), 10);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_text(den_text) || den_text[0] == '-') {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        den = Integer(std::string(den_text), 10);
        if (den == 0) {
            throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        }
    }
    Rational q(num, den);
    q.canonicalize();
    if (q.get_den() != den) {
        throw std::invalid_argument("rational not in lowest terms: '" + std::string(text) + "'");
    }
    return q;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace birkhoff
