#include "rx/oracle.hpp"

#include <cstddef>
#include <unordered_map>

namespace rx {

namespace {

struct Key {
    const Regex* e;
    size_t lo, hi;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    size_t operator()(const Key& k) const {
        size_t h = std::hash<const void*>()(k.e);
        h = h * 1000003u + k.lo;
        h = h * 1000003u + k.hi;
        return h;
    }
};

struct Search {
    InputView w;
    std::unordered_map<Key, bool, KeyHash> memo;
    uint64_t steps = 0;

    bool derive(const Regex& e, size_t lo, size_t hi) {
        Key key{&e, lo, hi};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        ++steps;
        bool ok = false;
        switch (e.kind) {
        case Regex::Kind::Eps:
            ok = lo == hi;
            break;
        case Regex::Kind::Chr:
            ok = hi == lo + 1 && w[lo] == e.sym;
            break;
        case Regex::Kind::Alt:
            ok = derive(*e.left, lo, hi) || derive(*e.right, lo, hi);
            break;
        case Regex::Kind::Seq:
            for (size_t mid = lo; mid <= hi && !ok; ++mid)
                ok = derive(*e.left, lo, mid) && derive(*e.right, mid, hi);
            break;
        case Regex::Kind::Star:
            if (lo == hi) {
                ok = true;   // empty iteration
            } else {
                // nonempty first chunk keeps the search well-founded
                for (size_t mid = lo + 1; mid <= hi && !ok; ++mid)
                    ok = derive(*e.left, lo, mid) && derive(e, mid, hi);
            }
            break;
        }
        memo.emplace(key, ok);
        return ok;
    }
};

} // namespace

bool oracle_matches(const Regex& e, InputView w, uint64_t* steps) {
    Search s{w, {}, 0};
    bool ok = s.derive(e, 0, w.size());
    if (steps) *steps += s.steps;
    return ok;
}

} // namespace rx
