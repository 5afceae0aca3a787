#ifndef QCPD_TIMESTAMP_HPP
#define QCPD_TIMESTAMP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcpd {

/// A timestamp is either an integer index or an ISO-8601 calendar date
/// (YYYY-MM-DD). ISO dates order correctly under lexicographic comparison,
/// so both kinds share a total order within their kind.
class Timestamp {
public:
    enum class Kind { Index, Date };

    Timestamp() : kind_(Kind::Index), index_(0) {}
    static Timestamp index(std::int64_t i) {
        Timestamp t;
        t.kind_ = Kind::Index;
        t.index_ = i;
        return t;
    }
    static Timestamp date(std::string iso);

    /// Auto-detects integer vs ISO-8601 date.
    static Timestamp parse(const std::string& text);

    Kind kind() const { return kind_; }
    std::int64_t as_index() const {
        if (kind_ != Kind::Index) throw std::logic_error("timestamp is not an index");
        return index_;
    }
    const std::string& as_date() const {
        if (kind_ != Kind::Date) throw std::logic_error("timestamp is not a date");
        return date_;
    }

    std::string to_string() const;

    bool operator==(const Timestamp& o) const;
    bool operator<(const Timestamp& o) const;
    bool operator<=(const Timestamp& o) const { return *this == o || *this < o; }
    bool operator>(const Timestamp& o) const { return !(*this <= o); }
    bool operator>=(const Timestamp& o) const { return !(*this < o); }
    bool operator!=(const Timestamp& o) const { return !(*this == o); }

private:
    Kind kind_;
    std::int64_t index_ = 0;
    std::string date_;
};

}  // namespace qcpd

#endif
