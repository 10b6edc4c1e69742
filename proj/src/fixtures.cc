// Copyright 2026 The bks Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bks/fixtures.h"

#include <stdexcept>
#include <string>

namespace bks::fixtures {

namespace {

// Rays are listed in their reference order; row k holds ray id k+1.
const std::vector<std::vector<int>> kRays2q = {
    { 1,  0,  0,  0},
    { 0,  1,  0,  0},
    { 0,  0,  1,  0},
    { 0,  0,  0,  1},
    { 1,  1,  1,  1},
    { 1,  1, -1, -1},
    { 1, -1,  1, -1},
    { 1, -1, -1,  1},
    { 1, -1, -1, -1},
    { 1, -1,  1,  1},
    { 1,  1, -1,  1},
    { 1,  1,  1, -1},
    { 1,  1,  0,  0},
    { 1, -1,  0,  0},
    { 0,  0,  1,  1},
    { 0,  0,  1, -1},
    { 0,  1,  0,  1},
    { 0,  1,  0, -1},
    { 1,  0,  1,  0},
    { 1,  0, -1,  0},
    { 1,  0,  0, -1},
    { 1,  0,  0,  1},
    { 0,  1, -1,  0},
    { 0,  1,  1,  0},
};

const std::vector<std::vector<int>> kRays3q = {
    { 1,  0,  0,  0,  0,  0,  0,  0},
    { 0,  1,  0,  0,  0,  0,  0,  0},
    { 0,  0,  1,  0,  0,  0,  0,  0},
    { 0,  0,  0,  1,  0,  0,  0,  0},
    { 0,  0,  0,  0,  1,  0,  0,  0},
    { 0,  0,  0,  0,  0,  1,  0,  0},
    { 0,  0,  0,  0,  0,  0,  1,  0},
    { 0,  0,  0,  0,  0,  0,  0,  1},
    { 1,  1,  1,  1,  0,  0,  0,  0},
    { 1,  1, -1, -1,  0,  0,  0,  0},
    { 1, -1,  1, -1,  0,  0,  0,  0},
    { 1, -1, -1,  1,  0,  0,  0,  0},
    { 0,  0,  0,  0,  1,  1,  1,  1},
    { 0,  0,  0,  0,  1,  1, -1, -1},
    { 0,  0,  0,  0,  1, -1,  1, -1},
    { 0,  0,  0,  0,  1, -1, -1,  1},
    { 1,  1,  0,  0,  1,  1,  0,  0},
    { 1,  1,  0,  0, -1, -1,  0,  0},
    { 1, -1,  0,  0,  1, -1,  0,  0},
    { 1, -1,  0,  0, -1,  1,  0,  0},
    { 0,  0,  1,  1,  0,  0,  1,  1},
    { 0,  0,  1,  1,  0,  0, -1, -1},
    { 0,  0,  1, -1,  0,  0,  1, -1},
    { 0,  0,  1, -1,  0,  0, -1,  1},
    { 1,  0,  1,  0,  1,  0,  1,  0},
    { 1,  0,  1,  0, -1,  0, -1,  0},
    { 1,  0, -1,  0,  1,  0, -1,  0},
    { 1,  0, -1,  0, -1,  0,  1,  0},
    { 0,  1,  0,  1,  0,  1,  0,  1},
    { 0,  1,  0,  1,  0, -1,  0, -1},
    { 0,  1,  0, -1,  0,  1,  0, -1},
    { 0,  1,  0, -1,  0, -1,  0,  1},
    { 1,  0,  0,  1,  0,  1, -1,  0},
    { 1,  0,  0, -1,  0,  1,  1,  0},
    { 1,  0,  0,  1,  0, -1,  1,  0},
    { 1,  0,  0, -1,  0, -1, -1,  0},
    { 0,  1,  1,  0, -1,  0,  0,  1},
    { 0,  1, -1,  0,  1,  0,  0,  1},
    { 0,  1, -1,  0, -1,  0,  0, -1},
    { 0,  1,  1,  0,  1,  0,  0, -1},
};

// Ids 9-16, 25-32 and 41-48 are not printed in the reference list. They are
// the remaining joint eigenvectors of the column contexts {Z1,X2,X3,Z4},
// {X1,X2,Z3,Z4} and {Z1,X2,Z3,X4}; the id order is the unique one for which
// every reference four-qubit proof basis is an orthogonal 16-set.
const std::vector<std::vector<int>> kRays4q = {
    { 1,  0,  1,  0,  1,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0,  1,  0,  1,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0, -1,  0, -1,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1,  0,  1,  0, -1,  0},
    { 0,  1,  0, -1,  0, -1,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  1,  0, -1,  0,  1,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0},
    { 1,  0,  1,  0, -1,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1,  0, -1,  0,  1,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0,  1,  0,  1},
    { 0,  1,  0,  1,  0,  1,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  1,  0,  1,  0, -1,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0},
    { 1,  0, -1,  0,  1,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1,  0, -1,  0,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1,  0,  1,  0, -1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0, -1,  0, -1},
    { 1,  0, -1,  0, -1,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  1,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  0,  1,  0},
    { 1,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  0},
    { 0,  1,  0,  0,  0, -1,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0},
    { 0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0,  1,  0,  0,  0, -1},
    { 0,  1,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0, -1,  0,  0},
    { 0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0, -1},
    { 1,  0,  0,  0, -1,  0,  0,  0, -1,  0,  0,  0,  1,  0,  0,  0},
    { 0,  1,  0,  0,  0, -1,  0,  0,  0, -1,  0,  0,  0,  1,  0,  0},
    { 0,  1,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0},
    { 0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  0,  1},
    { 0,  0,  1,  0,  0,  0, -1,  0,  0,  0,  1,  0,  0,  0, -1,  0},
    { 1,  0,  0,  0, -1,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0},
    { 0,  0,  1,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0, -1,  0},
    { 1,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0, -1,  0,  0,  0},
    { 0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0, -1,  0,  0,  0,  1},
    { 0,  0,  1,  0,  0,  0, -1,  0,  0,  0, -1,  0,  0,  0,  1,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0,  1,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0,  1,  1,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1,  0,  0, -1,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  1, -1,  0,  0,  1, -1,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0, -1, -1,  0,  0},
    { 1, -1,  0,  0,  1, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0, -1, -1},
    { 0,  0,  1, -1,  0,  0, -1,  1,  0,  0,  0,  0,  0,  0,  0,  0},
    { 1,  1,  0,  0,  1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  1,  1,  0,  0,  1,  1,  0,  0,  0,  0,  0,  0,  0,  0},
    { 1, -1,  0,  0, -1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  1, -1,  0,  0,  1, -1,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  1,  1,  0,  0, -1, -1,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1,  0,  0,  1, -1},
    { 1,  1,  0,  0, -1, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  1, -1,  0,  0, -1,  1,  0,  0},
    { 1, -1,  1, -1, -1,  1, -1,  1,  1, -1,  1, -1, -1,  1, -1,  1},
    { 1,  1,  1,  1, -1, -1, -1, -1, -1, -1, -1, -1,  1,  1,  1,  1},
    { 1,  1,  1,  1,  1,  1,  1,  1, -1, -1, -1, -1, -1, -1, -1, -1},
    { 1,  1, -1, -1,  1,  1, -1, -1, -1, -1,  1,  1, -1, -1,  1,  1},
    { 1,  1, -1, -1,  1,  1, -1, -1,  1,  1, -1, -1,  1,  1, -1, -1},
    { 1, -1,  1, -1,  1, -1,  1, -1,  1, -1,  1, -1,  1, -1,  1, -1},
    { 1, -1, -1,  1, -1,  1,  1, -1, -1,  1,  1, -1,  1, -1, -1,  1},
    { 1, -1,  1, -1, -1,  1, -1,  1, -1,  1, -1,  1,  1, -1,  1, -1},
    { 1, -1, -1,  1,  1, -1, -1,  1, -1,  1,  1, -1, -1,  1,  1, -1},
    { 1,  1, -1, -1, -1, -1,  1,  1, -1, -1,  1,  1,  1,  1, -1, -1},
    { 1, -1,  1, -1,  1, -1,  1, -1, -1,  1, -1,  1, -1,  1, -1,  1},
    { 1, -1, -1,  1, -1,  1,  1, -1,  1, -1, -1,  1, -1,  1,  1, -1},
    { 1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1},
    { 1,  1,  1,  1, -1, -1, -1, -1,  1,  1,  1,  1, -1, -1, -1, -1},
    { 1, -1, -1,  1,  1, -1, -1,  1,  1, -1, -1,  1,  1, -1, -1,  1},
    { 1,  1, -1, -1, -1, -1,  1,  1,  1,  1, -1, -1, -1, -1,  1,  1},
    { 1,  1,  1, -1, -1, -1, -1,  1,  1, -1, -1, -1, -1,  1,  1,  1},
    { 1, -1,  1,  1, -1,  1, -1, -1,  1,  1, -1,  1, -1, -1,  1, -1},
    { 1, -1, -1, -1, -1,  1,  1,  1, -1, -1, -1,  1,  1,  1,  1, -1},
    { 1,  1, -1,  1,  1,  1, -1,  1, -1,  1, -1, -1, -1,  1, -1, -1},
    { 1,  1, -1,  1, -1, -1,  1, -1, -1,  1, -1, -1,  1, -1,  1,  1},
    { 1, -1, -1, -1,  1, -1, -1, -1,  1,  1,  1, -1,  1,  1,  1, -1},
    { 1,  1, -1,  1, -1, -1,  1, -1,  1, -1,  1,  1, -1,  1, -1, -1},
    { 1,  1, -1,  1,  1,  1, -1,  1,  1, -1,  1,  1,  1, -1,  1,  1},
    { 1, -1, -1, -1, -1,  1,  1,  1,  1,  1,  1, -1, -1, -1, -1,  1},
    { 1, -1,  1,  1,  1, -1,  1,  1,  1,  1, -1,  1,  1,  1, -1,  1},
    { 1, -1,  1,  1, -1,  1, -1, -1, -1, -1,  1, -1,  1,  1, -1,  1},
    { 1,  1,  1, -1,  1,  1,  1, -1, -1,  1,  1,  1, -1,  1,  1,  1},
    { 1, -1, -1, -1,  1, -1, -1, -1, -1, -1, -1,  1, -1, -1, -1,  1},
    { 1,  1,  1, -1,  1,  1,  1, -1,  1, -1, -1, -1,  1, -1, -1, -1},
    { 1, -1,  1,  1,  1, -1,  1,  1, -1, -1,  1, -1, -1, -1,  1, -1},
    { 1,  1,  1, -1, -1, -1, -1,  1, -1,  1,  1,  1,  1, -1, -1, -1},
};

const std::vector<std::vector<int>> kBases2q = {
    { 1,  2,  3,  4},
    { 5,  6,  7,  8},
    { 9, 10, 11, 12},
    {13, 14, 15, 16},
    {17, 18, 19, 20},
    {21, 22, 23, 24},
    { 1,  2, 15, 16},
    { 1,  3, 17, 18},
    { 1,  4, 23, 24},
    { 2,  3, 21, 22},
    { 2,  4, 19, 20},
    { 3,  4, 13, 14},
    { 5,  6, 14, 16},
    { 5,  7, 18, 20},
    { 5,  8, 21, 23},
    { 6,  7, 22, 24},
    { 6,  8, 17, 19},
    { 7,  8, 13, 15},
    { 9, 10, 13, 16},
    { 9, 11, 18, 19},
    { 9, 12, 22, 23},
    {10, 11, 21, 24},
    {10, 12, 17, 20},
    {11, 12, 14, 15},
};

const std::vector<std::vector<int>> kBases3q = {
    { 1,  2,  3,  4,  5,  6,  7,  8},
    { 1,  2,  3,  4, 13, 14, 15, 16},
    { 1,  2,  5,  6, 21, 22, 23, 24},
    { 1,  3,  5,  7, 29, 30, 31, 32},
    { 1,  4,  6,  7, 37, 38, 39, 40},
    { 5,  6,  7,  8,  9, 10, 11, 12},
    { 9, 10, 11, 12, 13, 14, 15, 16},
    { 9, 10, 13, 14, 19, 20, 23, 24},
    { 9, 11, 13, 15, 27, 28, 31, 32},
    { 9, 12, 14, 15, 34, 36, 38, 39},
    {10, 11, 13, 16, 33, 35, 37, 40},
    {10, 12, 14, 16, 25, 26, 29, 30},
    {11, 12, 15, 16, 17, 18, 21, 22},
    { 3,  4,  7,  8, 17, 18, 19, 20},
    {17, 18, 19, 20, 21, 22, 23, 24},
    {17, 19, 21, 23, 26, 28, 30, 32},
    {17, 20, 22, 23, 35, 36, 37, 39},
    {18, 19, 21, 24, 33, 34, 38, 40},
    {18, 20, 22, 24, 25, 27, 29, 31},
    { 2,  4,  6,  8, 25, 26, 27, 28},
    {25, 26, 27, 28, 29, 30, 31, 32},
    {25, 28, 30, 31, 33, 36, 37, 38},
    {26, 27, 29, 32, 34, 35, 39, 40},
    { 2,  3,  5,  8, 33, 34, 35, 36},
    {33, 34, 35, 36, 37, 38, 39, 40},
};

// Row-major 4x4 arrangement of the 16 proofs of type 18-9 (basis ids).
const std::vector<std::vector<int>> kMagicSquare = {
    { 7,  8, 10, 13, 14, 16, 22, 23, 24},
    { 7,  9, 11, 14, 15, 18, 19, 20, 22},
    { 8,  9, 12, 16, 17, 18, 20, 21, 24},
    {10, 11, 12, 13, 15, 17, 19, 21, 23},
    { 7,  9, 11, 16, 17, 18, 19, 21, 23},
    { 7,  8, 10, 13, 15, 17, 20, 21, 24},
    {10, 11, 12, 13, 14, 16, 19, 20, 22},
    { 8,  9, 12, 14, 15, 18, 22, 23, 24},
    { 8,  9, 12, 13, 15, 17, 19, 20, 22},
    {10, 11, 12, 16, 17, 18, 22, 23, 24},
    { 7,  8, 10, 14, 15, 18, 19, 21, 23},
    { 7,  9, 11, 13, 14, 16, 20, 21, 24},
    {10, 11, 12, 14, 15, 18, 20, 21, 24},
    { 8,  9, 12, 13, 14, 16, 19, 21, 23},
    { 7,  9, 11, 13, 15, 17, 22, 23, 24},
    { 7,  8, 10, 16, 17, 18, 19, 20, 22},
};

// Index of the basis shared by the 2x2 block of proofs whose upper-left
// corner is at the same position (the square wraps around).
const std::vector<int> kMagicSquareIndices = {7, 20, 12, 23, 17, 10, 14, 9, 12, 23, 7, 20, 14, 9, 17, 10};

const std::vector<std::vector<int>> kPentagramProofs = {
    { 1,  2,  3,  4,  8,  9, 11, 16, 17, 23, 24},
    { 1,  2,  3,  4,  8,  9, 11, 18, 19, 22, 24},
    { 1,  2,  3,  4,  8, 10, 12, 16, 17, 22, 24},
    { 1,  2,  3,  4,  8, 10, 12, 18, 19, 23, 24},
    { 1,  2,  3,  4,  9, 10, 13, 16, 18, 23, 24},
    { 1,  2,  3,  4,  9, 10, 13, 17, 19, 22, 24},
    { 1,  2,  3,  4, 11, 12, 13, 16, 18, 22, 24},
    { 1,  2,  3,  4, 11, 12, 13, 17, 19, 23, 24},
    { 1,  2,  3,  5,  8,  9, 11, 16, 17, 20, 22},
    { 1,  2,  3,  5,  8,  9, 11, 18, 19, 20, 23},
    { 1,  2,  3,  5,  8, 10, 12, 16, 17, 20, 23},
    { 1,  2,  3,  5,  8, 10, 12, 18, 19, 20, 22},
    { 1,  2,  3,  5,  9, 10, 13, 16, 18, 20, 22},
    { 1,  2,  3,  5,  9, 10, 13, 17, 19, 20, 23},
    { 1,  2,  3,  5, 11, 12, 13, 16, 18, 20, 23},
    { 1,  2,  3,  5, 11, 12, 13, 17, 19, 20, 22},
};

const std::vector<std::vector<int>> kElevenBases = {
    { 1,  2,  3,  4,  5,  6,  7,  8},
    {10, 11, 13, 16, 33, 35, 37, 40},
    {17, 19, 21, 23, 26, 28, 30, 32},
    {17, 20, 22, 23, 35, 36, 37, 39},
    { 9, 11, 13, 15, 27, 28, 31, 32},
    { 1,  3,  5,  7, 29, 30, 31, 32},
    { 2,  3,  5,  8, 33, 34, 35, 36},
    { 1,  2,  3,  4, 13, 14, 15, 16},
    { 1,  2,  5,  6, 21, 22, 23, 24},
    {26, 27, 29, 32, 34, 35, 39, 40},
    { 9, 10, 13, 14, 19, 20, 23, 24},
};

const std::vector<std::vector<int>> kProof80_21 = {
    {35, 37, 43, 45, 51, 53, 54, 57, 65, 69, 71, 72, 74, 76, 77, 80},
    {17, 18, 25, 26, 35, 37, 39, 40, 43, 45, 47, 48, 51, 52, 57, 59},
    {35, 40, 43, 48, 50, 52, 58, 59, 61, 62, 63, 64, 68, 70, 78, 79},
    { 1,  2,  4,  5,  7, 11, 12, 16, 21, 22, 25, 26, 35, 37, 39, 48},
    { 3,  7,  8, 16, 18, 19, 20, 21, 24, 25, 30, 31, 33, 42, 44, 46},
    { 1,  2,  3,  4,  6,  7,  8,  9, 10, 12, 14, 16, 19, 20, 24, 31},
    { 1,  6, 10, 12, 23, 24, 31, 32, 33, 34, 36, 46, 49, 60, 62, 64},
    {17, 18, 20, 21, 22, 25, 26, 27, 29, 30, 31, 32, 37, 43, 47, 48},
    {20, 27, 31, 32, 33, 34, 36, 37, 38, 41, 42, 43, 44, 46, 47, 48},
    { 1,  2,  9, 10, 20, 27, 31, 32, 37, 43, 47, 48, 52, 53, 57, 63},
    { 3,  7, 11, 15, 33, 34, 41, 42, 54, 55, 57, 58, 59, 60, 63, 64},
    { 1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 11, 12, 13, 14, 15, 16},
    { 2,  3, 10, 11, 12, 13, 14, 16, 65, 66, 74, 75, 76, 78, 79, 80},
    {33, 36, 41, 44, 56, 58, 60, 62, 65, 69, 70, 73, 74, 75, 77, 79},
    { 4,  6, 12, 14, 51, 54, 56, 58, 59, 60, 61, 62, 65, 69, 73, 75},
    {18, 21, 26, 29, 49, 50, 55, 64, 66, 67, 68, 71, 76, 77, 79, 80},
    { 5, 11, 13, 15, 21, 22, 23, 27, 28, 29, 30, 32, 53, 54, 61, 63},
    { 5, 11, 13, 15, 17, 18, 23, 25, 26, 27, 28, 32, 51, 52, 57, 59},
    {33, 34, 36, 38, 41, 42, 44, 46, 65, 66, 67, 69, 71, 73, 75, 80},
    {17, 18, 20, 21, 22, 24, 25, 26, 28, 29, 30, 32, 67, 69, 75, 80},
    { 1,  6, 10, 12, 33, 34, 36, 39, 40, 46, 47, 48, 66, 67, 73, 75},
};

const std::vector<std::vector<int>> kProofExtensions = {
    { 2, 10, 12, 14, 35, 37, 43, 45, 65, 69, 71, 74, 76, 78, 79, 80},
    {49, 50, 55, 56, 58, 60, 62, 64, 68, 70, 72, 74, 76, 77, 78, 79},
};

}  // namespace

const std::vector<std::vector<int>> &ray_table(int num_qubits) {
    switch (num_qubits) {
        case 2:
            return kRays2q;
        case 3:
            return kRays3q;
        case 4:
            return kRays4q;
        default:
            throw std::invalid_argument("no reference ray list for " + std::to_string(num_qubits) + " qubits");
    }
}

const std::vector<std::vector<int>> &basis_table(int num_qubits) {
    switch (num_qubits) {
        case 2:
            return kBases2q;
        case 3:
            return kBases3q;
        default:
            throw std::invalid_argument("no reference basis list for " + std::to_string(num_qubits) + " qubits");
    }
}

const std::vector<std::vector<int>> &magic_square_proofs() {
    return kMagicSquare;
}

const std::vector<int> &magic_square_indices() {
    return kMagicSquareIndices;
}

std::vector<int> magic_square9_bases() {
    return kMagicSquare.front();
}

const std::vector<std::vector<int>> &pentagram_proofs() {
    return kPentagramProofs;
}

const std::vector<std::vector<int>> &eleven_bases() {
    return kElevenBases;
}

std::vector<std::vector<int>> four_qubit_proof(int num_bases) {
    std::vector<std::vector<int>> result = kProof80_21;
    switch (num_bases) {
        case 21:
            break;
        case 22:
            // Only this extension reproduces the reference 80-22 distance histogram.
            result.push_back(kProofExtensions[1]);
            break;
        case 23:
            result.push_back(kProofExtensions[0]);
            result.push_back(kProofExtensions[1]);
            break;
        default:
            throw std::invalid_argument("no reference 80-" + std::to_string(num_bases) + " proof");
    }
    return result;
}

const std::vector<std::vector<int>> &four_qubit_extensions() {
    return kProofExtensions;
}

}  // namespace bks::fixtures
