#include "orbitlef/rational.h"

#include <cctype>
#include <sstream>

namespace orbitlef {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1)
        os << '/' << r.get_den();
    return os.str();
}

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        fail(ErrorKind::ParseError, "empty rational");
    auto is_int = [](const std::string& v) {
        std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
        if (i == v.size())
            return false;
        for (; i < v.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(v[i])))
                return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s))
            fail(ErrorKind::ParseError, "bad rational: '" + text + "'");
        return Rat(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        fail(ErrorKind::ParseError, "bad rational: '" + text + "'");
    if (mpz_class(den) == 0)
        fail(ErrorKind::ParseError, "zero denominator: '" + text + "'");
    Rat r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        out.push_back(parse_rat(item));
    if (out.empty())
        fail(ErrorKind::ParseError, "empty rational list");
    return out;
}

} // namespace orbitlef
