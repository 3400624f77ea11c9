#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turaev/error.hpp"

namespace turaev {

enum class GradeKind { Semigroup, Monoid, Group };

std::string to_string(GradeKind k);

/// A finite grading semigroup given by its Cayley table. Flags are always
/// recomputed from the table at construction; a non-associative table is
/// rejected with a violating triple in the message.
class GradeTable {
  public:
    /// `table` is row-major, n*n entries in [0, n). Optional names, one per
    /// element; defaults to g0, g1, ...
    static GradeTable validate(const std::vector<std::vector<int>>& table,
                               std::vector<std::string> names = {});

    int size() const { return n_; }
    int product(int p, int q) const { return table_[static_cast<size_t>(p) * n_ + q]; }

    GradeKind kind() const { return kind_; }
    bool commutative() const { return commutative_; }
    bool has_unit() const { return unit_.has_value(); }
    int unit() const;
    /// Inverse of an element; only for groups.
    int inverse(int p) const;

    const std::string& name(int p) const { return names_[static_cast<size_t>(p)]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(const std::string& name) const;

    std::string classify() const; // e.g. "commutative monoid"

    bool operator==(const GradeTable& o) const {
        return n_ == o.n_ && table_ == o.table_ && names_ == o.names_;
    }

    // Common tables.
    static GradeTable trivial();                  // {1}
    static GradeTable monoid_1q();                // {1, q}, q*q = q
    static GradeTable cyclic(int n);              // Z/n
    static GradeTable named(const std::string&);  // "trivial" | "1q" | "z2" | "z<n>"

  private:
    GradeTable() = default;

    int n_ = 0;
    std::vector<int> table_; // row-major
    std::vector<std::string> names_;
    GradeKind kind_ = GradeKind::Semigroup;
    bool commutative_ = false;
    std::optional<int> unit_;
    std::vector<int> inverses_;
};

} // namespace turaev
