#include "qcpd/timestamp.hpp"

#include <cctype>
#include <charconv>

namespace qcpd {

namespace {

bool looks_like_iso_date(const std::string& s) {
    // YYYY-MM-DD, optionally with a time suffix (kept verbatim).
    if (s.size() < 10) return false;
    for (int i : {0, 1, 2, 3, 5, 6, 8, 9})
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return s[4] == '-' && s[7] == '-';
}

}  // namespace

Timestamp Timestamp::date(std::string iso) {
    if (!looks_like_iso_date(iso))
        throw std::invalid_argument("not an ISO-8601 date: " + iso);
    Timestamp t;
    t.kind_ = Kind::Date;
    t.date_ = std::move(iso);
    return t;
}

Timestamp Timestamp::parse(const std::string& text) {
    if (looks_like_iso_date(text)) return date(text);
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("unparseable timestamp: " + text);
    return index(v);
}

std::string Timestamp::to_string() const {
    return kind_ == Kind::Index ? std::to_string(index_) : date_;
}

bool Timestamp::operator==(const Timestamp& o) const {
    if (kind_ != o.kind_) return false;
    return kind_ == Kind::Index ? index_ == o.index_ : date_ == o.date_;
}

bool Timestamp::operator<(const Timestamp& o) const {
    if (kind_ != o.kind_)
        throw std::invalid_argument("cannot order an index timestamp against a date timestamp");
    return kind_ == Kind::Index ? index_ < o.index_ : date_ < o.date_;
}

}  // namespace qcpd
