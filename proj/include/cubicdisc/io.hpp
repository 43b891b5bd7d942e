#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "cubicdisc/model_spaces.hpp"

namespace cubicdisc {

using Json = nlohmann::ordered_json;

// Malformed input; byte is the offset reported by the parser (0 when not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what, std::size_t byte = 0)
      : std::runtime_error(where + ": " + what), byte(byte) {}
  std::size_t byte;
};

// Exact: {"a","b","c","d"} rational strings. Float: {"re","im"} numbers (exact encodings are accepted too).
template <class T>
Json scalar_to_json(const T& x);
template <class T>
T scalar_from_json(const Json& j);

template <class T>
Json to_json(const IndexedTensor<T>& t);
template <class T>
IndexedTensor<T> indexed_tensor_from_json(const Json& j);

template <class T>
Json to_json(const SymQuartic<T>& s);
template <class T>
SymQuartic<T> sym_quartic_from_json(const Json& j);

template <class T>
Json to_json(const HKTensor<T>& k);
template <class T>
HKTensor<T> hk_tensor_from_json(const Json& j);

template <class T>
Json to_json(const CoframeSystem<T>& cs);
template <class T>
CoframeSystem<T> coframe_from_json(const Json& j);

// Parses text; syntax errors carry the byte offset.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// Loads a document by its "kind", writes it back next to the source, reloads it and compares.
template <class T>
bool io_roundtrip(const std::string& path);

}  // namespace cubicdisc
