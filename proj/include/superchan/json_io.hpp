// SPDX-FileCopyrightText: Copyright (c) 2026 superchan contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "superchan/channel.hpp"
#include "superchan/dephasing.hpp"
#include "superchan/do_superchannel.hpp"
#include "superchan/du_superchannel.hpp"
#include "superchan/operator.hpp"
#include "superchan/pauli.hpp"
#include "superchan/superchannel.hpp"

namespace superchan::json {

using nlohmann::json;

// Throws Error(Parse) with line and column of the failure.
json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);
std::string dump(const json& j);

// {"dims":[d1,...], "data":[[re,im],...]}
json to_json(const MultipartiteOperator& m);
MultipartiteOperator operator_from_json(const json& j);
json table_to_json(const Matrix& m, std::size_t d);
Matrix table_from_json(const json& j, std::size_t d, const char* name);

json to_json(const ChoiChannel& ch);
ChoiChannel channel_from_json(const json& j);

json to_json(const SuperChoi& s);
SuperChoi superchannel_from_json(const json& j);

json to_json(const DUSuperParams& p);
DUSuperParams du_from_json(const json& j);

json to_json(const DOSuperParams& p);
DOSuperParams do_from_json(const json& j);

json to_json(const DephasingSuperParams& p);
DephasingSuperParams dephasing_from_json(const json& j);

struct Realization {
  std::vector<Matrix> u;
  std::vector<Matrix> v;
  Vector psi;
};
Realization realization_from_json(const json& j);
json to_json(const Realization& r);

json to_json(const PauliSuperParams& p);
PauliSuperParams pauli_from_json(const json& j);

}  // namespace superchan::json
