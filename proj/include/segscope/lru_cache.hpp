// Copyright 2026 The segscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <future>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace segscope {

/// Thread-safe least-recently-used cache of immutable values.
///
/// A miss installs a pending slot and computes the value outside the lock:
/// concurrent requests for the same key wait on that slot, requests for
/// other keys proceed. A failed computation is not cached; every waiter sees
/// the exception.
template <typename Key, typename Value>
class LruCache {
public:
    using Handle = std::shared_ptr<const Value>;

    explicit LruCache(std::size_t capacity) : capacity_(capacity == 0 ? 1 : capacity) {}

    template <typename Compute>
    Handle get_or_compute(const Key& key, Compute&& compute) {
        std::promise<Handle> promise;
        std::shared_future<Handle> pending;
        std::uint64_t ticket = 0;
        {
            std::lock_guard lock(mutex_);
            if (auto it = index_.find(key); it != index_.end()) {
                order_.splice(order_.begin(), order_, it->second);
                pending = it->second->future;
            } else {
                ticket = ++next_ticket_;
                order_.push_front(Slot{key, promise.get_future().share(), ticket});
                index_.emplace(key, order_.begin());
                evict_locked();
            }
        }
        if (pending.valid()) return pending.get();

        try {
            Handle value = std::make_shared<const Value>(compute());
            promise.set_value(value);
            return value;
        } catch (...) {
            promise.set_exception(std::current_exception());
            std::lock_guard lock(mutex_);
            // The slot may have been evicted and refilled meanwhile.
            if (auto it = index_.find(key); it != index_.end() && it->second->ticket == ticket) {
                order_.erase(it->second);
                index_.erase(it);
            }
            throw;
        }
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return order_.size();
    }

private:
    struct Slot {
        Key key;
        std::shared_future<Handle> future;
        std::uint64_t ticket;
    };

    void evict_locked() {
        while (order_.size() > capacity_) {
            index_.erase(order_.back().key);
            order_.pop_back();
        }
    }

    std::size_t capacity_;
    std::uint64_t next_ticket_ = 0;
    mutable std::mutex mutex_;
    std::list<Slot> order_;
    std::map<Key, typename std::list<Slot>::iterator> index_;
};

}  // namespace segscope
