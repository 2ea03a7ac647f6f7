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

// Lookup tables quantized to 8 bits (round half-up) from the published
// float definitions: Turbo (Mikhailov 2019), matplotlib "rainbow",
// ColorBrewer "Paired" and matplotlib "nipy_spectral".

#include "colormap_data.hpp"

namespace segscope::detail {

const std::array<Rgb, 256> kTurboLut = {{
    Rgb{48, 18, 59}, Rgb{50, 21, 67}, Rgb{51, 24, 74}, Rgb{52, 27, 81},
    Rgb{53, 30, 88}, Rgb{54, 33, 95}, Rgb{55, 36, 102}, Rgb{56, 39, 109},
    Rgb{57, 42, 115}, Rgb{58, 45, 121}, Rgb{59, 47, 128}, Rgb{60, 50, 134},
    Rgb{61, 53, 139}, Rgb{62, 56, 145}, Rgb{63, 59, 151}, Rgb{63, 62, 156},
    Rgb{64, 64, 162}, Rgb{65, 67, 167}, Rgb{65, 70, 172}, Rgb{66, 73, 177},
    Rgb{66, 75, 181}, Rgb{67, 78, 186}, Rgb{68, 81, 191}, Rgb{68, 84, 195},
    Rgb{68, 86, 199}, Rgb{69, 89, 203}, Rgb{69, 92, 207}, Rgb{69, 94, 211},
    Rgb{70, 97, 214}, Rgb{70, 100, 218}, Rgb{70, 102, 221}, Rgb{70, 105, 224},
    Rgb{70, 107, 227}, Rgb{71, 110, 230}, Rgb{71, 113, 233}, Rgb{71, 115, 235},
    Rgb{71, 118, 238}, Rgb{71, 120, 240}, Rgb{71, 123, 242}, Rgb{70, 125, 244},
    Rgb{70, 128, 246}, Rgb{70, 130, 248}, Rgb{70, 133, 250}, Rgb{70, 135, 251},
    Rgb{69, 138, 252}, Rgb{69, 140, 253}, Rgb{68, 143, 254}, Rgb{67, 145, 254},
    Rgb{66, 148, 255}, Rgb{65, 150, 255}, Rgb{64, 153, 255}, Rgb{62, 155, 254},
    Rgb{61, 158, 254}, Rgb{59, 160, 253}, Rgb{58, 163, 252}, Rgb{56, 165, 251},
    Rgb{55, 168, 250}, Rgb{53, 171, 248}, Rgb{51, 173, 247}, Rgb{49, 175, 245},
    Rgb{47, 178, 244}, Rgb{46, 180, 242}, Rgb{44, 183, 240}, Rgb{42, 185, 238},
    Rgb{40, 188, 235}, Rgb{39, 190, 233}, Rgb{37, 192, 231}, Rgb{35, 195, 228},
    Rgb{34, 197, 226}, Rgb{32, 199, 223}, Rgb{31, 201, 221}, Rgb{30, 203, 218},
    Rgb{28, 205, 216}, Rgb{27, 208, 213}, Rgb{26, 210, 210}, Rgb{26, 212, 208},
    Rgb{25, 213, 205}, Rgb{24, 215, 202}, Rgb{24, 217, 200}, Rgb{24, 219, 197},
    Rgb{24, 221, 194}, Rgb{24, 222, 192}, Rgb{24, 224, 189}, Rgb{25, 226, 187},
    Rgb{25, 227, 185}, Rgb{26, 228, 182}, Rgb{28, 230, 180}, Rgb{29, 231, 178},
    Rgb{31, 233, 175}, Rgb{32, 234, 172}, Rgb{34, 235, 170}, Rgb{37, 236, 167},
    Rgb{39, 238, 164}, Rgb{42, 239, 161}, Rgb{44, 240, 158}, Rgb{47, 241, 155},
    Rgb{50, 242, 152}, Rgb{53, 243, 148}, Rgb{56, 244, 145}, Rgb{60, 245, 142},
    Rgb{63, 246, 138}, Rgb{67, 247, 135}, Rgb{70, 248, 132}, Rgb{74, 248, 128},
    Rgb{78, 249, 125}, Rgb{82, 250, 122}, Rgb{85, 250, 118}, Rgb{89, 251, 115},
    Rgb{93, 252, 111}, Rgb{97, 252, 108}, Rgb{101, 253, 105}, Rgb{105, 253, 102},
    Rgb{109, 254, 98}, Rgb{113, 254, 95}, Rgb{117, 254, 92}, Rgb{121, 254, 89},
    Rgb{125, 255, 86}, Rgb{128, 255, 83}, Rgb{132, 255, 81}, Rgb{136, 255, 78},
    Rgb{139, 255, 75}, Rgb{143, 255, 73}, Rgb{146, 255, 71}, Rgb{150, 254, 68},
    Rgb{153, 254, 66}, Rgb{156, 254, 64}, Rgb{159, 253, 63}, Rgb{161, 253, 61},
    Rgb{164, 252, 60}, Rgb{167, 252, 58}, Rgb{169, 251, 57}, Rgb{172, 251, 56},
    Rgb{175, 250, 55}, Rgb{177, 249, 54}, Rgb{180, 248, 54}, Rgb{183, 247, 53},
    Rgb{185, 246, 53}, Rgb{188, 245, 52}, Rgb{190, 244, 52}, Rgb{193, 243, 52},
    Rgb{195, 241, 52}, Rgb{198, 240, 52}, Rgb{200, 239, 52}, Rgb{203, 237, 52},
    Rgb{205, 236, 52}, Rgb{208, 234, 52}, Rgb{210, 233, 53}, Rgb{212, 231, 53},
    Rgb{215, 229, 53}, Rgb{217, 228, 54}, Rgb{219, 226, 54}, Rgb{221, 224, 55},
    Rgb{223, 223, 55}, Rgb{225, 221, 55}, Rgb{227, 219, 56}, Rgb{229, 217, 56},
    Rgb{231, 215, 57}, Rgb{233, 213, 57}, Rgb{235, 211, 57}, Rgb{236, 209, 58},
    Rgb{238, 207, 58}, Rgb{239, 205, 58}, Rgb{241, 203, 58}, Rgb{242, 201, 58},
    Rgb{244, 199, 58}, Rgb{245, 197, 58}, Rgb{246, 195, 58}, Rgb{247, 193, 58},
    Rgb{248, 190, 57}, Rgb{249, 188, 57}, Rgb{250, 186, 57}, Rgb{251, 184, 56},
    Rgb{251, 182, 55}, Rgb{252, 179, 54}, Rgb{252, 177, 54}, Rgb{253, 174, 53},
    Rgb{253, 172, 52}, Rgb{254, 169, 51}, Rgb{254, 167, 50}, Rgb{254, 164, 49},
    Rgb{254, 161, 48}, Rgb{254, 158, 47}, Rgb{254, 155, 45}, Rgb{254, 153, 44},
    Rgb{254, 150, 43}, Rgb{254, 147, 42}, Rgb{254, 144, 41}, Rgb{253, 141, 39},
    Rgb{253, 138, 38}, Rgb{252, 135, 37}, Rgb{252, 132, 35}, Rgb{251, 129, 34},
    Rgb{251, 126, 33}, Rgb{250, 123, 31}, Rgb{249, 120, 30}, Rgb{249, 117, 29},
    Rgb{248, 114, 28}, Rgb{247, 111, 26}, Rgb{246, 108, 25}, Rgb{245, 105, 24},
    Rgb{244, 102, 23}, Rgb{243, 99, 21}, Rgb{242, 96, 20}, Rgb{241, 93, 19},
    Rgb{240, 91, 18}, Rgb{239, 88, 17}, Rgb{237, 85, 16}, Rgb{236, 83, 15},
    Rgb{235, 80, 14}, Rgb{234, 78, 13}, Rgb{232, 75, 12}, Rgb{231, 73, 12},
    Rgb{229, 71, 11}, Rgb{228, 69, 10}, Rgb{226, 67, 10}, Rgb{225, 65, 9},
    Rgb{223, 63, 8}, Rgb{221, 61, 8}, Rgb{220, 59, 7}, Rgb{218, 57, 7},
    Rgb{216, 55, 6}, Rgb{214, 53, 6}, Rgb{212, 51, 5}, Rgb{210, 49, 5},
    Rgb{208, 47, 5}, Rgb{206, 45, 4}, Rgb{204, 43, 4}, Rgb{202, 42, 4},
    Rgb{200, 40, 3}, Rgb{197, 38, 3}, Rgb{195, 37, 3}, Rgb{193, 35, 2},
    Rgb{190, 33, 2}, Rgb{188, 32, 2}, Rgb{185, 30, 2}, Rgb{183, 29, 2},
    Rgb{180, 27, 1}, Rgb{178, 26, 1}, Rgb{175, 24, 1}, Rgb{172, 23, 1},
    Rgb{169, 22, 1}, Rgb{167, 20, 1}, Rgb{164, 19, 1}, Rgb{161, 18, 1},
    Rgb{158, 16, 1}, Rgb{155, 15, 1}, Rgb{152, 14, 1}, Rgb{149, 13, 1},
    Rgb{146, 11, 1}, Rgb{142, 10, 1}, Rgb{139, 9, 2}, Rgb{136, 8, 2},
    Rgb{133, 7, 2}, Rgb{129, 6, 2}, Rgb{126, 5, 2}, Rgb{122, 4, 3},
}};

const std::array<Rgb, 256> kRainbowLut = {{
    Rgb{128, 0, 255}, Rgb{126, 3, 255}, Rgb{124, 6, 255}, Rgb{122, 9, 255},
    Rgb{120, 13, 255}, Rgb{118, 16, 255}, Rgb{116, 19, 255}, Rgb{114, 22, 255},
    Rgb{112, 25, 255}, Rgb{110, 28, 255}, Rgb{108, 31, 255}, Rgb{106, 34, 254},
    Rgb{104, 38, 254}, Rgb{102, 41, 254}, Rgb{100, 44, 254}, Rgb{98, 47, 254},
    Rgb{96, 50, 254}, Rgb{94, 53, 254}, Rgb{92, 56, 253}, Rgb{90, 59, 253},
    Rgb{88, 62, 253}, Rgb{86, 65, 253}, Rgb{84, 68, 253}, Rgb{82, 71, 252},
    Rgb{80, 74, 252}, Rgb{78, 77, 252}, Rgb{76, 80, 252}, Rgb{74, 83, 251},
    Rgb{72, 86, 251}, Rgb{70, 89, 251}, Rgb{68, 92, 251}, Rgb{66, 95, 250},
    Rgb{64, 98, 250}, Rgb{62, 101, 250}, Rgb{60, 104, 249}, Rgb{57, 107, 249},
    Rgb{56, 109, 249}, Rgb{54, 112, 248}, Rgb{52, 115, 248}, Rgb{49, 118, 248},
    Rgb{48, 121, 247}, Rgb{46, 123, 247}, Rgb{44, 126, 247}, Rgb{41, 129, 246},
    Rgb{40, 132, 246}, Rgb{38, 134, 245}, Rgb{36, 137, 245}, Rgb{33, 140, 244},
    Rgb{32, 142, 244}, Rgb{30, 145, 243}, Rgb{28, 147, 243}, Rgb{25, 150, 243},
    Rgb{24, 152, 242}, Rgb{22, 155, 242}, Rgb{20, 157, 241}, Rgb{17, 160, 241},
    Rgb{16, 162, 240}, Rgb{14, 165, 239}, Rgb{12, 167, 239}, Rgb{9, 169, 238},
    Rgb{8, 172, 238}, Rgb{6, 174, 237}, Rgb{4, 176, 237}, Rgb{1, 179, 236},
    Rgb{0, 181, 235}, Rgb{2, 183, 235}, Rgb{4, 185, 234}, Rgb{7, 187, 234},
    Rgb{8, 190, 233}, Rgb{10, 192, 232}, Rgb{13, 194, 232}, Rgb{15, 196, 231},
    Rgb{16, 198, 230}, Rgb{18, 200, 230}, Rgb{20, 202, 229}, Rgb{23, 203, 228},
    Rgb{24, 205, 228}, Rgb{26, 207, 227}, Rgb{29, 209, 226}, Rgb{31, 211, 225},
    Rgb{33, 213, 225}, Rgb{34, 214, 224}, Rgb{36, 216, 223}, Rgb{39, 218, 222},
    Rgb{41, 219, 222}, Rgb{42, 221, 221}, Rgb{45, 222, 220}, Rgb{47, 224, 219},
    Rgb{49, 225, 218}, Rgb{50, 227, 218}, Rgb{52, 228, 217}, Rgb{55, 230, 216},
    Rgb{57, 231, 215}, Rgb{58, 232, 214}, Rgb{61, 234, 213}, Rgb{63, 235, 213},
    Rgb{65, 236, 212}, Rgb{66, 237, 211}, Rgb{68, 238, 210}, Rgb{71, 239, 209},
    Rgb{73, 241, 208}, Rgb{74, 242, 207}, Rgb{77, 243, 206}, Rgb{79, 243, 205},
    Rgb{81, 244, 204}, Rgb{82, 245, 203}, Rgb{84, 246, 203}, Rgb{87, 247, 202},
    Rgb{89, 248, 201}, Rgb{90, 248, 200}, Rgb{93, 249, 199}, Rgb{95, 250, 198},
    Rgb{97, 250, 197}, Rgb{98, 251, 196}, Rgb{100, 251, 195}, Rgb{103, 252, 194},
    Rgb{105, 252, 193}, Rgb{106, 253, 192}, Rgb{109, 253, 191}, Rgb{111, 254, 190},
    Rgb{113, 254, 188}, Rgb{114, 254, 187}, Rgb{116, 254, 186}, Rgb{119, 255, 185},
    Rgb{121, 255, 184}, Rgb{122, 255, 183}, Rgb{125, 255, 182}, Rgb{127, 255, 181},
    Rgb{129, 255, 180}, Rgb{131, 255, 179}, Rgb{132, 255, 178}, Rgb{134, 255, 176},
    Rgb{136, 255, 175}, Rgb{139, 254, 174}, Rgb{141, 254, 173}, Rgb{143, 254, 172},
    Rgb{145, 254, 171}, Rgb{147, 253, 169}, Rgb{148, 253, 168}, Rgb{150, 252, 167},
    Rgb{153, 252, 166}, Rgb{155, 251, 165}, Rgb{157, 251, 164}, Rgb{159, 250, 162},
    Rgb{161, 250, 161}, Rgb{163, 249, 160}, Rgb{164, 248, 159}, Rgb{166, 248, 157},
    Rgb{168, 247, 156}, Rgb{171, 246, 155}, Rgb{173, 245, 154}, Rgb{175, 244, 152},
    Rgb{177, 243, 151}, Rgb{179, 243, 150}, Rgb{180, 242, 149}, Rgb{182, 241, 147},
    Rgb{185, 239, 146}, Rgb{187, 238, 145}, Rgb{189, 237, 143}, Rgb{191, 236, 142},
    Rgb{193, 235, 141}, Rgb{195, 234, 140}, Rgb{196, 232, 138}, Rgb{198, 231, 137},
    Rgb{200, 230, 136}, Rgb{203, 228, 134}, Rgb{205, 227, 133}, Rgb{207, 225, 132},
    Rgb{209, 224, 130}, Rgb{211, 222, 129}, Rgb{212, 221, 128}, Rgb{214, 219, 126},
    Rgb{217, 218, 125}, Rgb{219, 216, 123}, Rgb{221, 214, 122}, Rgb{223, 213, 121},
    Rgb{225, 211, 119}, Rgb{227, 209, 118}, Rgb{228, 207, 116}, Rgb{230, 205, 115},
    Rgb{232, 203, 114}, Rgb{235, 202, 112}, Rgb{237, 200, 111}, Rgb{239, 198, 109},
    Rgb{241, 196, 108}, Rgb{243, 194, 107}, Rgb{244, 192, 105}, Rgb{246, 190, 104},
    Rgb{249, 187, 102}, Rgb{251, 185, 101}, Rgb{253, 183, 99}, Rgb{255, 181, 98},
    Rgb{255, 179, 96}, Rgb{255, 176, 95}, Rgb{255, 174, 94}, Rgb{255, 172, 92},
    Rgb{255, 169, 91}, Rgb{255, 167, 89}, Rgb{255, 165, 88}, Rgb{255, 162, 86},
    Rgb{255, 160, 85}, Rgb{255, 157, 83}, Rgb{255, 155, 82}, Rgb{255, 152, 80},
    Rgb{255, 150, 79}, Rgb{255, 147, 77}, Rgb{255, 145, 76}, Rgb{255, 142, 74},
    Rgb{255, 140, 73}, Rgb{255, 137, 71}, Rgb{255, 134, 70}, Rgb{255, 132, 68},
    Rgb{255, 129, 67}, Rgb{255, 126, 65}, Rgb{255, 123, 64}, Rgb{255, 121, 62},
    Rgb{255, 118, 61}, Rgb{255, 115, 59}, Rgb{255, 112, 58}, Rgb{255, 109, 56},
    Rgb{255, 107, 55}, Rgb{255, 104, 53}, Rgb{255, 101, 51}, Rgb{255, 98, 50},
    Rgb{255, 95, 48}, Rgb{255, 92, 47}, Rgb{255, 89, 45}, Rgb{255, 86, 44},
    Rgb{255, 83, 42}, Rgb{255, 80, 41}, Rgb{255, 77, 39}, Rgb{255, 74, 38},
    Rgb{255, 71, 36}, Rgb{255, 68, 34}, Rgb{255, 65, 33}, Rgb{255, 62, 31},
    Rgb{255, 59, 30}, Rgb{255, 56, 28}, Rgb{255, 53, 27}, Rgb{255, 50, 25},
    Rgb{255, 47, 24}, Rgb{255, 44, 22}, Rgb{255, 41, 20}, Rgb{255, 38, 19},
    Rgb{255, 34, 17}, Rgb{255, 31, 16}, Rgb{255, 28, 14}, Rgb{255, 25, 13},
    Rgb{255, 22, 11}, Rgb{255, 19, 9}, Rgb{255, 16, 8}, Rgb{255, 13, 6},
    Rgb{255, 9, 5}, Rgb{255, 6, 3}, Rgb{255, 3, 2}, Rgb{255, 0, 0},
}};

const std::array<Rgb, 12> kPairedColors = {{
    Rgb{166, 206, 227}, Rgb{31, 120, 180}, Rgb{178, 223, 138}, Rgb{51, 160, 44},
    Rgb{251, 154, 153}, Rgb{227, 26, 28}, Rgb{253, 191, 111}, Rgb{255, 127, 0},
    Rgb{202, 178, 214}, Rgb{106, 61, 154}, Rgb{255, 255, 153}, Rgb{177, 89, 40},
}};

const std::array<Rgb, 256> kNipySpectralLut = {{
    Rgb{0, 0, 0}, Rgb{9, 0, 11}, Rgb{19, 0, 21}, Rgb{28, 0, 32},
    Rgb{37, 0, 43}, Rgb{47, 0, 53}, Rgb{56, 0, 64}, Rgb{65, 0, 75},
    Rgb{75, 0, 85}, Rgb{84, 0, 96}, Rgb{93, 0, 107}, Rgb{103, 0, 117},
    Rgb{112, 0, 128}, Rgb{119, 0, 136}, Rgb{121, 0, 138}, Rgb{122, 0, 139},
    Rgb{123, 0, 140}, Rgb{125, 0, 142}, Rgb{126, 0, 143}, Rgb{127, 0, 144},
    Rgb{129, 0, 146}, Rgb{130, 0, 147}, Rgb{131, 0, 148}, Rgb{133, 0, 150},
    Rgb{134, 0, 151}, Rgb{135, 0, 152}, Rgb{131, 0, 154}, Rgb{120, 0, 155},
    Rgb{109, 0, 156}, Rgb{99, 0, 158}, Rgb{88, 0, 159}, Rgb{77, 0, 160},
    Rgb{67, 0, 162}, Rgb{56, 0, 163}, Rgb{45, 0, 164}, Rgb{35, 0, 166},
    Rgb{24, 0, 167}, Rgb{13, 0, 168}, Rgb{3, 0, 170}, Rgb{0, 0, 173},
    Rgb{0, 0, 177}, Rgb{0, 0, 181}, Rgb{0, 0, 185}, Rgb{0, 0, 189},
    Rgb{0, 0, 193}, Rgb{0, 0, 197}, Rgb{0, 0, 201}, Rgb{0, 0, 205},
    Rgb{0, 0, 209}, Rgb{0, 0, 213}, Rgb{0, 0, 217}, Rgb{0, 0, 221},
    Rgb{0, 9, 221}, Rgb{0, 19, 221}, Rgb{0, 28, 221}, Rgb{0, 37, 221},
    Rgb{0, 47, 221}, Rgb{0, 56, 221}, Rgb{0, 65, 221}, Rgb{0, 75, 221},
    Rgb{0, 84, 221}, Rgb{0, 93, 221}, Rgb{0, 103, 221}, Rgb{0, 112, 221},
    Rgb{0, 120, 221}, Rgb{0, 122, 221}, Rgb{0, 125, 221}, Rgb{0, 128, 221},
    Rgb{0, 130, 221}, Rgb{0, 133, 221}, Rgb{0, 136, 221}, Rgb{0, 138, 221},
    Rgb{0, 141, 221}, Rgb{0, 144, 221}, Rgb{0, 146, 221}, Rgb{0, 149, 221},
    Rgb{0, 152, 221}, Rgb{0, 154, 219}, Rgb{0, 155, 215}, Rgb{0, 156, 211},
    Rgb{0, 158, 207}, Rgb{0, 159, 203}, Rgb{0, 160, 199}, Rgb{0, 162, 195},
    Rgb{0, 163, 191}, Rgb{0, 164, 187}, Rgb{0, 166, 183}, Rgb{0, 167, 179},
    Rgb{0, 168, 175}, Rgb{0, 170, 171}, Rgb{0, 170, 168}, Rgb{0, 170, 165},
    Rgb{0, 170, 163}, Rgb{0, 170, 160}, Rgb{0, 170, 157}, Rgb{0, 170, 155},
    Rgb{0, 170, 152}, Rgb{0, 170, 149}, Rgb{0, 170, 147}, Rgb{0, 170, 144},
    Rgb{0, 170, 141}, Rgb{0, 170, 139}, Rgb{0, 170, 136}, Rgb{0, 169, 125},
    Rgb{0, 167, 115}, Rgb{0, 166, 104}, Rgb{0, 165, 93}, Rgb{0, 163, 83},
    Rgb{0, 162, 72}, Rgb{0, 161, 61}, Rgb{0, 159, 51}, Rgb{0, 158, 40},
    Rgb{0, 157, 29}, Rgb{0, 155, 19}, Rgb{0, 154, 8}, Rgb{0, 154, 0},
    Rgb{0, 156, 0}, Rgb{0, 159, 0}, Rgb{0, 162, 0}, Rgb{0, 164, 0},
    Rgb{0, 167, 0}, Rgb{0, 170, 0}, Rgb{0, 172, 0}, Rgb{0, 175, 0},
    Rgb{0, 178, 0}, Rgb{0, 180, 0}, Rgb{0, 183, 0}, Rgb{0, 186, 0},
    Rgb{0, 188, 0}, Rgb{0, 191, 0}, Rgb{0, 194, 0}, Rgb{0, 196, 0},
    Rgb{0, 199, 0}, Rgb{0, 202, 0}, Rgb{0, 204, 0}, Rgb{0, 207, 0},
    Rgb{0, 210, 0}, Rgb{0, 212, 0}, Rgb{0, 215, 0}, Rgb{0, 218, 0},
    Rgb{0, 220, 0}, Rgb{0, 223, 0}, Rgb{0, 226, 0}, Rgb{0, 228, 0},
    Rgb{0, 231, 0}, Rgb{0, 234, 0}, Rgb{0, 236, 0}, Rgb{0, 239, 0},
    Rgb{0, 242, 0}, Rgb{0, 244, 0}, Rgb{0, 247, 0}, Rgb{0, 250, 0},
    Rgb{0, 252, 0}, Rgb{0, 255, 0}, Rgb{15, 255, 0}, Rgb{29, 255, 0},
    Rgb{44, 255, 0}, Rgb{59, 255, 0}, Rgb{73, 255, 0}, Rgb{88, 255, 0},
    Rgb{103, 255, 0}, Rgb{117, 255, 0}, Rgb{132, 255, 0}, Rgb{147, 255, 0},
    Rgb{161, 255, 0}, Rgb{176, 255, 0}, Rgb{188, 255, 0}, Rgb{192, 253, 0},
    Rgb{196, 252, 0}, Rgb{200, 251, 0}, Rgb{204, 249, 0}, Rgb{208, 248, 0},
    Rgb{212, 247, 0}, Rgb{216, 245, 0}, Rgb{220, 244, 0}, Rgb{224, 243, 0},
    Rgb{228, 241, 0}, Rgb{232, 240, 0}, Rgb{236, 239, 0}, Rgb{239, 237, 0},
    Rgb{240, 234, 0}, Rgb{241, 231, 0}, Rgb{243, 229, 0}, Rgb{244, 226, 0},
    Rgb{245, 223, 0}, Rgb{247, 221, 0}, Rgb{248, 218, 0}, Rgb{249, 215, 0},
    Rgb{251, 213, 0}, Rgb{252, 210, 0}, Rgb{253, 207, 0}, Rgb{255, 205, 0},
    Rgb{255, 201, 0}, Rgb{255, 197, 0}, Rgb{255, 193, 0}, Rgb{255, 189, 0},
    Rgb{255, 185, 0}, Rgb{255, 181, 0}, Rgb{255, 177, 0}, Rgb{255, 173, 0},
    Rgb{255, 169, 0}, Rgb{255, 165, 0}, Rgb{255, 161, 0}, Rgb{255, 157, 0},
    Rgb{255, 153, 0}, Rgb{255, 141, 0}, Rgb{255, 129, 0}, Rgb{255, 117, 0},
    Rgb{255, 105, 0}, Rgb{255, 93, 0}, Rgb{255, 81, 0}, Rgb{255, 69, 0},
    Rgb{255, 57, 0}, Rgb{255, 45, 0}, Rgb{255, 33, 0}, Rgb{255, 21, 0},
    Rgb{255, 9, 0}, Rgb{254, 0, 0}, Rgb{252, 0, 0}, Rgb{249, 0, 0},
    Rgb{246, 0, 0}, Rgb{244, 0, 0}, Rgb{241, 0, 0}, Rgb{238, 0, 0},
    Rgb{236, 0, 0}, Rgb{233, 0, 0}, Rgb{230, 0, 0}, Rgb{228, 0, 0},
    Rgb{225, 0, 0}, Rgb{222, 0, 0}, Rgb{220, 0, 0}, Rgb{219, 0, 0},
    Rgb{218, 0, 0}, Rgb{216, 0, 0}, Rgb{215, 0, 0}, Rgb{214, 0, 0},
    Rgb{212, 0, 0}, Rgb{211, 0, 0}, Rgb{210, 0, 0}, Rgb{208, 0, 0},
    Rgb{207, 0, 0}, Rgb{206, 0, 0}, Rgb{204, 0, 0}, Rgb{204, 12, 12},
    Rgb{204, 28, 28}, Rgb{204, 44, 44}, Rgb{204, 60, 60}, Rgb{204, 76, 76},
    Rgb{204, 92, 92}, Rgb{204, 108, 108}, Rgb{204, 124, 124}, Rgb{204, 140, 140},
    Rgb{204, 156, 156}, Rgb{204, 172, 172}, Rgb{204, 188, 188}, Rgb{204, 204, 204},
}};

}  // namespace segscope::detail
