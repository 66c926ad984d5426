#ifndef TAUTRING_VARSPACE_HPP
#define TAUTRING_VARSPACE_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautring {

struct Var {
    std::string name;
    int weight;  // positive weighted-grading weight
};

/// Ordered list of named, weighted variables. The declaration order is fixed
/// at creation and determines the canonical term order of every polynomial
/// over this space. Immutable; shared via VarSpacePtr.
class VarSpace {
public:
    static std::shared_ptr<const VarSpace> create(std::vector<Var> vars) {
        return std::shared_ptr<const VarSpace>(new VarSpace(std::move(vars)));
    }

    int size() const { return static_cast<int>(vars_.size()); }
    const Var& var(int i) const { return vars_.at(i); }
    const std::string& name(int i) const { return vars_.at(i).name; }
    int weight(int i) const { return vars_.at(i).weight; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("VarSpace: unknown variable '" + name + "'");
        return it->second;
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    friend bool operator==(const VarSpace& a, const VarSpace& b) {
        if (a.size() != b.size()) return false;
        for (int i = 0; i < a.size(); ++i)
            if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].weight != b.vars_[i].weight)
                return false;
        return true;
    }
    friend bool operator!=(const VarSpace& a, const VarSpace& b) { return !(a == b); }

private:
    explicit VarSpace(std::vector<Var> vars) : vars_(std::move(vars)) {
        for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
            if (vars_[i].weight <= 0)
                throw std::invalid_argument("VarSpace: weight must be positive");
            if (!index_.emplace(vars_[i].name, i).second)
                throw std::invalid_argument("VarSpace: duplicate variable '" + vars_[i].name + "'");
        }
    }

    std::vector<Var> vars_;
    std::map<std::string, int> index_;
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

inline bool same_space(const VarSpacePtr& a, const VarSpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace tautring

#endif
