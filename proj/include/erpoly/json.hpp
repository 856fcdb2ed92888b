#pragma once

// Minimal deterministic JSON writer. Machine output must be byte-identical
// across runs and must carry arbitrary-precision integers exactly, so this
// emits numbers as raw decimal strings (JSON places no width limit on
// number literals) and keeps object keys in insertion order. Output only —
// reading JSON is done with an ordinary parser.

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "erpoly/ints.hpp"

namespace erpoly {
namespace json {

class Value;
using Member = std::pair<std::string, Value>;

class Value {
public:
    Value() : node_(nullptr) {}

    static Value null() { return Value(); }
    static Value boolean(bool b) { return Value(Node(b)); }
    static Value number(const Int& v) { return Value(Node(Number{v.str()})); }
    static Value number(long long v) { return Value(Node(Number{std::to_string(v)})); }
    static Value number(unsigned long long v) { return Value(Node(Number{std::to_string(v)})); }
    static Value number(int v) { return Value(Node(Number{std::to_string(v)})); }
    static Value string(std::string s) { return Value(Node(String{std::move(s)})); }
    static Value array() { return Value(Node(Array{})); }
    static Value object() { return Value(Node(Object{})); }

    /// Append to an array value; returns *this for chaining.
    Value& push(Value v) {
        std::get<Array>(node_).items.push_back(std::move(v));
        return *this;
    }

    /// Add a member to an object value; keys keep insertion order.
    Value& add(std::string key, Value v) {
        std::get<Object>(node_).members.emplace_back(std::move(key), std::move(v));
        return *this;
    }

    /// Append another object's members to this object, preserving order.
    Value& merge(Value other) {
        auto& dst = std::get<Object>(node_).members;
        for (auto& m : std::get<Object>(other.node_).members) dst.push_back(std::move(m));
        return *this;
    }

    /// Compact serialization (no whitespace), deterministic byte-for-byte.
    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    struct Number {
        std::string decimal;
    };
    struct String {
        std::string text;
    };
    struct Array {
        std::vector<Value> items;
    };
    struct Object {
        std::vector<Member> members;
    };
    using Node = std::variant<std::nullptr_t, bool, Number, String, Array, Object>;

    explicit Value(Node n) : node_(std::move(n)) {}

    static void escape_into(const std::string& s, std::string& out) {
        out += '"';
        for (unsigned char ch : s) {
            switch (ch) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\b': out += "\\b"; break;
                case '\f': out += "\\f"; break;
                case '\n': out += "\\n"; break;
                case '\r': out += "\\r"; break;
                case '\t': out += "\\t"; break;
                default:
                    if (ch < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                        out += buf;
                    } else {
                        out += static_cast<char>(ch);
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        if (std::holds_alternative<std::nullptr_t>(node_)) {
            out += "null";
        } else if (const bool* b = std::get_if<bool>(&node_)) {
            out += *b ? "true" : "false";
        } else if (const Number* n = std::get_if<Number>(&node_)) {
            out += n->decimal;
        } else if (const String* s = std::get_if<String>(&node_)) {
            escape_into(s->text, out);
        } else if (const Array* a = std::get_if<Array>(&node_)) {
            out += '[';
            for (std::size_t i = 0; i < a->items.size(); ++i) {
                if (i > 0) out += ',';
                a->items[i].write(out);
            }
            out += ']';
        } else {
            const Object& o = std::get<Object>(node_);
            out += '{';
            for (std::size_t i = 0; i < o.members.size(); ++i) {
                if (i > 0) out += ',';
                escape_into(o.members[i].first, out);
                out += ':';
                o.members[i].second.write(out);
            }
            out += '}';
        }
    }

    Node node_;
};

}  // namespace json
}  // namespace erpoly
