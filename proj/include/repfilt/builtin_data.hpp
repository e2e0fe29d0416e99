#pragma once

// Generated by tools/gen_builtin_systems.py; do not edit.

#include <string_view>
#include <utility>

namespace repfilt::data {

inline constexpr std::pair<std::string_view, std::string_view> kBuiltinSystems[] = {
    {"S3/C", R"json({"base":"Complex","characteristic":0,"flags":{"frobenius":true,"mackey":true,"semisimple":true},"group":"S3","groups":[{"class_key":"e","ind":{"C2":[[1,1]],"C3":[[1,1,1]],"S3":[[1,1,2]]},"indecomposables":[{"dim":1,"label":"[1]"}],"res":{},"trivial":"[1]","weyl":[{"element":"(1 2)","perm":[0]},{"element":"(0 1)","perm":[0]}]},{"class_key":"C2","ind":{"S3":[[1,0,1],[0,1,1]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[-1]"}],"res":{"e":[[1],[1]]},"trivial":"[1]","weyl":[]},{"class_key":"C3","ind":{"S3":[[1,1,0],[0,0,1],[0,0,1]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[eta3]"},{"dim":1,"label":"[eta3^2]"}],"res":{"e":[[1],[1],[1]]},"trivial":"[1]","weyl":[{"element":"(1 2)","perm":[0,2,1]}]},{"class_key":"S3","ind":{},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[sgn]"},{"dim":2,"label":"[nu3]"}],"res":{"C2":[[1,0],[0,1],[1,1]],"C3":[[1,0,0],[1,0,0],[0,1,1]],"e":[[1],[1],[2]]},"trivial":"[1]","weyl":[]}],"name":"paper:S3/C"})json"},
    {"S3/R", R"json({"base":"Real","characteristic":0,"flags":{"frobenius":false,"mackey":true,"semisimple":true},"group":"S3","groups":[{"class_key":"e","ind":{"C2":[[1,1]],"C3":[[1,1]],"S3":[[1,1,2]]},"indecomposables":[{"dim":1,"label":"[1]"}],"res":{},"trivial":"[1]","weyl":[{"element":"(1 2)","perm":[0]},{"element":"(0 1)","perm":[0]}]},{"class_key":"C2","ind":{"S3":[[1,0,1],[0,1,1]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[-1]"}],"res":{"e":[[1],[1]]},"trivial":"[1]","weyl":[]},{"class_key":"C3","ind":{"S3":[[1,1,0],[0,0,2]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":2,"label":"[rho3]"}],"res":{"e":[[1],[2]]},"trivial":"[1]","weyl":[{"element":"(1 2)","perm":[0,1]}]},{"class_key":"S3","ind":{},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[sgn]"},{"dim":2,"label":"[nu3]"}],"res":{"C2":[[1,0],[0,1],[1,1]],"C3":[[1,0],[1,0],[0,1]],"e":[[1],[1],[2]]},"trivial":"[1]","weyl":[]}],"name":"paper:S3/R"})json"},
    {"A4/Q", R"json({"base":"Rational","characteristic":0,"flags":{"frobenius":false,"mackey":true,"semisimple":true},"group":"A4","groups":[{"class_key":"e","ind":{"A4":[[1,1,3]],"C2":[[1,1]],"C3":[[1,1]],"V4":[[1,1,1,1]]},"indecomposables":[{"dim":1,"label":"[1]"}],"res":{},"trivial":"[1]","weyl":[{"element":"(1 2 3)","perm":[0]},{"element":"(0 1)(2 3)","perm":[0]}]},{"class_key":"C2","ind":{"A4":[[1,1,1],[0,0,2]],"V4":[{"conjugator":"()","matrix":[[1,1,0,0],[0,0,1,1]]},{"conjugator":"(1 2 3)","matrix":[[1,0,1,0],[0,1,0,1]]},{"conjugator":"(1 3 2)","matrix":[[1,0,0,1],[0,1,1,0]]}]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[-1]"}],"res":{"e":[[1],[1]]},"trivial":"[1]","weyl":[{"element":"(0 2)(1 3)","perm":[0,1]}]},{"class_key":"C3","ind":{"A4":[[1,0,1],[0,1,2]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":2,"label":"[rho3]"}],"res":{"e":[[1],[2]]},"trivial":"[1]","weyl":[]},{"class_key":"V4","ind":{"A4":[[1,1,0],[0,0,1],[0,0,1],[0,0,1]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[phi1]"},{"dim":1,"label":"[phi2]"},{"dim":1,"label":"[phi3]"}],"res":{"C2":[{"conjugator":"()","matrix":[[1,0],[1,0],[0,1],[0,1]]},{"conjugator":"(1 2 3)","matrix":[[1,0],[0,1],[1,0],[0,1]]},{"conjugator":"(1 3 2)","matrix":[[1,0],[0,1],[0,1],[1,0]]}],"e":[[1],[1],[1],[1]]},"trivial":"[1]","weyl":[{"element":"(1 2 3)","perm":[0,2,3,1]}]},{"class_key":"A4","ind":{},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":2,"label":"[eta]"},{"dim":3,"label":"[nu4]"}],"res":{"C2":[[1,0],[2,0],[1,2]],"C3":[[1,0],[0,1],[1,1]],"V4":[[1,0,0,0],[2,0,0,0],[0,1,1,1]],"e":[[1],[2],[3]]},"trivial":"[1]","weyl":[]}],"name":"paper:A4/Q"})json"},
    {"D5/Q", R"json({"base":"Rational","characteristic":0,"flags":{"frobenius":false,"mackey":true,"semisimple":true},"group":"D5","groups":[{"class_key":"e","ind":{"C2":[[1,1]],"C5":[[1,1]],"D5":[[1,1,2]]},"indecomposables":[{"dim":1,"label":"[1]"}],"res":{},"trivial":"[1]","weyl":[{"element":"(1 4)(2 3)","perm":[0]},{"element":"(0 1)(2 4)","perm":[0]}]},{"class_key":"C2","ind":{"D5":[[1,0,1],[0,1,1]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[-1]"}],"res":{"e":[[1],[1]]},"trivial":"[1]","weyl":[]},{"class_key":"C5","ind":{"D5":[[1,1,0],[0,0,2]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":4,"label":"[rho5]"}],"res":{"e":[[1],[4]]},"trivial":"[1]","weyl":[{"element":"(1 4)(2 3)","perm":[0,1]}]},{"class_key":"D5","ind":{},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[-1]"},{"dim":4,"label":"[psi]"}],"res":{"C2":[[1,0],[0,1],[2,2]],"C5":[[1,0],[1,0],[0,1]],"e":[[1],[1],[4]]},"trivial":"[1]","weyl":[]}],"name":"paper:D5/Q"})json"},
    {"A5/Q", R"json({"base":"Rational","characteristic":0,"flags":{"frobenius":false,"mackey":true,"semisimple":true},"group":"A5","groups":[{"class_key":"e","ind":{"A4":[[1,1,3]],"A5":[[1,4,5,3]],"C2":[[1,1]],"C3":[[1,1]],"C5":[[1,1]],"D5":[[1,1,2]],"S3":[[1,1,2]],"V4":[[1,1,1,1]]},"indecomposables":[{"dim":1,"label":"[1]"}],"res":{},"trivial":"[1]","weyl":[{"element":"(2 3 4)","perm":[0]},{"element":"(1 2)(3 4)","perm":[0]},{"element":"(0 1)(3 4)","perm":[0]}]},{"class_key":"C2","ind":{"A4":[[1,1,1],[0,0,2]],"A5":[[1,2,3,1],[0,2,2,2]],"D5":[[1,0,1],[0,1,1]],"S3":[{"conjugator":"(0 2 1)","matrix":[[1,0,1],[0,1,1]]}],"V4":[{"conjugator":"()","matrix":[[1,1,0,0],[0,0,1,1]]},{"conjugator":"(2 3 4)","matrix":[[1,0,1,0],[0,1,0,1]]},{"conjugator":"(2 4 3)","matrix":[[1,0,0,1],[0,1,1,0]]}]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[-1]"}],"res":{"e":[[1],[1]]},"trivial":"[1]","weyl":[{"element":"(1 3)(2 4)","perm":[0,1]}]},{"class_key":"C3","ind":{"A4":[[1,0,1],[0,1,2]],"A5":[[1,2,1,1],[0,2,4,2]],"S3":[[1,1,0],[0,0,2]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":2,"label":"[rho3]"}],"res":{"e":[[1],[2]]},"trivial":"[1]","weyl":[{"element":"(0 1)(3 4)","perm":[0,1]}]},{"class_key":"V4","ind":{"A4":[[1,1,0],[0,0,1],[0,0,1],[0,0,1]],"A5":[[1,1,2,0],[0,1,1,1],[0,1,1,1],[0,1,1,1]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[phi1]"},{"dim":1,"label":"[phi2]"},{"dim":1,"label":"[phi3]"}],"res":{"C2":[{"conjugator":"()","matrix":[[1,0],[1,0],[0,1],[0,1]]},{"conjugator":"(2 3 4)","matrix":[[1,0],[0,1],[1,0],[0,1]]},{"conjugator":"(2 4 3)","matrix":[[1,0],[0,1],[0,1],[1,0]]}],"e":[[1],[1],[1],[1]]},"trivial":"[1]","weyl":[{"element":"(2 3 4)","perm":[0,2,3,1]}]},{"class_key":"C5","ind":{"A5":[[1,0,1,1],[0,4,4,2]],"D5":[{"conjugator":"(2 3 4)","matrix":[[1,1,0],[0,0,2]]}]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":4,"label":"[rho5]"}],"res":{"e":[[1],[4]]},"trivial":"[1]","weyl":[{"element":"(1 4)(2 3)","perm":[0,1]}]},{"class_key":"S3","ind":{"A5":[[1,1,1,0],[0,1,0,1],[0,1,2,1]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[sgn]"},{"dim":2,"label":"[nu3]"}],"res":{"C2":[{"conjugator":"(0 2 1)","matrix":[[1,0],[0,1],[1,1]]}],"C3":[[1,0],[1,0],[0,1]],"e":[[1],[1],[2]]},"trivial":"[1]","weyl":[]},{"class_key":"D5","ind":{"A5":[[1,0,1,0],[0,0,0,1],[0,2,2,1]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":1,"label":"[-1]"},{"dim":4,"label":"[psi]"}],"res":{"C2":[[1,0],[0,1],[2,2]],"C5":[{"conjugator":"(2 3 4)","matrix":[[1,0],[1,0],[0,1]]}],"e":[[1],[1],[4]]},"trivial":"[1]","weyl":[]},{"class_key":"A4","ind":{"A5":[[1,1,0,0],[0,0,2,0],[0,1,1,1]]},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":2,"label":"[eta]"},{"dim":3,"label":"[nu4]"}],"res":{"C2":[[1,0],[2,0],[1,2]],"C3":[[1,0],[0,1],[1,1]],"V4":[[1,0,0,0],[2,0,0,0],[0,1,1,1]],"e":[[1],[2],[3]]},"trivial":"[1]","weyl":[]},{"class_key":"A5","ind":{},"indecomposables":[{"dim":1,"label":"[1]"},{"dim":4,"label":"[nu5]"},{"dim":5,"label":"[psi]"},{"dim":6,"label":"[L2nu5]"}],"res":{"A4":[[1,0,0],[1,0,1],[0,1,1],[0,0,2]],"C2":[[1,0],[2,2],[3,2],[2,4]],"C3":[[1,0],[2,1],[1,2],[2,2]],"C5":[[1,0],[0,1],[1,1],[2,1]],"D5":[[1,0,0],[0,0,1],[1,0,1],[0,2,1]],"S3":[[1,0,0],[1,1,1],[1,0,2],[0,2,2]],"V4":[[1,0,0,0],[1,1,1,1],[2,1,1,1],[0,2,2,2]],"e":[[1],[4],[5],[6]]},"trivial":"[1]","weyl":[]}],"name":"paper:A5/Q"})json"},
};

}  // namespace repfilt::data
