// Copyright 2026 The MicroTEE Simulator Authors
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

// Frozen reference vectors for the crypto regression tests. Produced once
// with an independent implementation (see oracles/gen_vectors.py) and
// checked in as literals; do not regenerate casually.

#pragma once

namespace vectors {

inline constexpr unsigned char AES_CBC_KEY[] = {
    0x2b, 0x7e, 0x15, 0x16, 0x28, 0xae, 0xd2, 0xa6, 0xab, 0xf7, 0x15, 0x88,
    0x09, 0xcf, 0x4f, 0x3c};

inline constexpr unsigned char AES_CBC_IV[] = {
    0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07, 0x08, 0x09, 0x0a, 0x0b,
    0x0c, 0x0d, 0x0e, 0x0f};

inline constexpr unsigned char AES_CBC_PT[] = {
    0x6b, 0xc1, 0xbe, 0xe2, 0x2e, 0x40, 0x9f, 0x96, 0xe9, 0x3d, 0x7e, 0x11,
    0x73, 0x93, 0x17, 0x2a, 0xae, 0x2d, 0x8a, 0x57, 0x1e, 0x03, 0xac, 0x9c,
    0x9e, 0xb7, 0x6f, 0xac, 0x45, 0xaf, 0x8e, 0x51, 0x30, 0xc8, 0x1c, 0x46,
    0xa3, 0x5c, 0xe4, 0x11, 0xe5, 0xfb, 0xc1, 0x19, 0x1a, 0x0a, 0x52, 0xef,
    0xf6, 0x9f, 0x24, 0x45, 0xdf, 0x4f, 0x9b, 0x17, 0xad, 0x2b, 0x41, 0x7b,
    0xe6, 0x6c, 0x37, 0x10};

inline constexpr unsigned char AES_CBC_CT[] = {
    0x76, 0x49, 0xab, 0xac, 0x81, 0x19, 0xb2, 0x46, 0xce, 0xe9, 0x8e, 0x9b,
    0x12, 0xe9, 0x19, 0x7d, 0x50, 0x86, 0xcb, 0x9b, 0x50, 0x72, 0x19, 0xee,
    0x95, 0xdb, 0x11, 0x3a, 0x91, 0x76, 0x78, 0xb2, 0x73, 0xbe, 0xd6, 0xb8,
    0xe3, 0xc1, 0x74, 0x3b, 0x71, 0x16, 0xe6, 0x9e, 0x22, 0x22, 0x95, 0x16,
    0x3f, 0xf1, 0xca, 0xa1, 0x68, 0x1f, 0xac, 0x09, 0x12, 0x0e, 0xca, 0x30,
    0x75, 0x86, 0xe1, 0xa7};

inline constexpr unsigned char AES_CBC_CT_PADDED[] = {
    0x76, 0x49, 0xab, 0xac, 0x81, 0x19, 0xb2, 0x46, 0xce, 0xe9, 0x8e, 0x9b,
    0x12, 0xe9, 0x19, 0x7d, 0x50, 0x86, 0xcb, 0x9b, 0x50, 0x72, 0x19, 0xee,
    0x95, 0xdb, 0x11, 0x3a, 0x91, 0x76, 0x78, 0xb2, 0x73, 0xbe, 0xd6, 0xb8,
    0xe3, 0xc1, 0x74, 0x3b, 0x71, 0x16, 0xe6, 0x9e, 0x22, 0x22, 0x95, 0x16,
    0x3f, 0xf1, 0xca, 0xa1, 0x68, 0x1f, 0xac, 0x09, 0x12, 0x0e, 0xca, 0x30,
    0x75, 0x86, 0xe1, 0xa7, 0x8c, 0xb8, 0x28, 0x07, 0x23, 0x0e, 0x13, 0x21,
    0xd3, 0xfa, 0xe0, 0x0d, 0x18, 0xcc, 0x20, 0x12};

inline constexpr unsigned char SHA256_EMPTY[] = {
    0xe3, 0xb0, 0xc4, 0x42, 0x98, 0xfc, 0x1c, 0x14, 0x9a, 0xfb, 0xf4, 0xc8,
    0x99, 0x6f, 0xb9, 0x24, 0x27, 0xae, 0x41, 0xe4, 0x64, 0x9b, 0x93, 0x4c,
    0xa4, 0x95, 0x99, 0x1b, 0x78, 0x52, 0xb8, 0x55};

inline constexpr unsigned char SHA256_ABC[] = {
    0xba, 0x78, 0x16, 0xbf, 0x8f, 0x01, 0xcf, 0xea, 0x41, 0x41, 0x40, 0xde,
    0x5d, 0xae, 0x22, 0x23, 0xb0, 0x03, 0x61, 0xa3, 0x96, 0x17, 0x7a, 0x9c,
    0xb4, 0x10, 0xff, 0x61, 0xf2, 0x00, 0x15, 0xad};

inline constexpr unsigned char HMAC_KEY[] = {
    0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b,
    0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b, 0x0b};

inline constexpr unsigned char HMAC_DATA[] = {
    0x48, 0x69, 0x20, 0x54, 0x68, 0x65, 0x72, 0x65};

inline constexpr unsigned char HMAC_TAG[] = {
    0xb0, 0x34, 0x4c, 0x61, 0xd8, 0xdb, 0x38, 0x53, 0x5c, 0xa8, 0xaf, 0xce,
    0xaf, 0x0b, 0xf1, 0x2b, 0x88, 0x1d, 0xc2, 0x00, 0xc9, 0x83, 0x3d, 0xa7,
    0x26, 0xe9, 0x37, 0x6c, 0x2e, 0x32, 0xcf, 0xf7};

inline constexpr unsigned char RSA_PRIV_DER[] = {
    0x30, 0x82, 0x04, 0xbe, 0x02, 0x01, 0x00, 0x30, 0x0d, 0x06, 0x09, 0x2a,
    0x86, 0x48, 0x86, 0xf7, 0x0d, 0x01, 0x01, 0x01, 0x05, 0x00, 0x04, 0x82,
    0x04, 0xa8, 0x30, 0x82, 0x04, 0xa4, 0x02, 0x01, 0x00, 0x02, 0x82, 0x01,
    0x01, 0x00, 0xd0, 0x08, 0xa6, 0x45, 0x65, 0xf4, 0xce, 0x8a, 0x69, 0xe4,
    0x53, 0xd3, 0xe5, 0xac, 0xdd, 0xe1, 0x97, 0x46, 0x72, 0xe9, 0xeb, 0x7c,
    0x7f, 0x9b, 0xbb, 0x3c, 0xbf, 0x60, 0x21, 0xe5, 0x5a, 0x72, 0xfe, 0x20,
    0x60, 0x69, 0x7a, 0x83, 0x5c, 0xa1, 0x18, 0x33, 0xdc, 0x16, 0x04, 0x58,
    0x01, 0x25, 0x2e, 0x84, 0x05, 0x00, 0x3b, 0x0e, 0xba, 0x02, 0xa3, 0x01,
    0xb3, 0xd1, 0xe6, 0xb2, 0x22, 0xd8, 0x1c, 0x47, 0x23, 0x96, 0xb3, 0x48,
    0x57, 0x87, 0x83, 0xc2, 0xa6, 0x5c, 0xb8, 0x61, 0x0c, 0xcb, 0x28, 0x41,
    0x93, 0x7a, 0x1b, 0xce, 0x2f, 0xdf, 0x4c, 0x1a, 0x3a, 0x22, 0x96, 0x01,
    0x20, 0x01, 0x55, 0x60, 0x76, 0x46, 0x68, 0x65, 0xf3, 0x36, 0xe6, 0x14,
    0xc6, 0x95, 0x17, 0x3f, 0x57, 0xdd, 0x00, 0x3c, 0xdd, 0x62, 0x0a, 0x8b,
    0x91, 0x29, 0x73, 0xe5, 0xad, 0x0e, 0x46, 0x74, 0x71, 0x88, 0xf2, 0xfe,
    0x61, 0x13, 0x91, 0x20, 0x42, 0x3f, 0xba, 0xb0, 0x0c, 0x6a, 0xd1, 0x5a,
    0xee, 0x51, 0x91, 0xbc, 0xa8, 0xc9, 0x49, 0x49, 0x06, 0x79, 0xb5, 0xb8,
    0x25, 0x12, 0xf9, 0xba, 0xa6, 0x63, 0xa6, 0x7a, 0x40, 0x5a, 0xc9, 0x35,
    0x58, 0x03, 0x32, 0x03, 0xea, 0x1b, 0xff, 0xaa, 0x40, 0xe0, 0x3a, 0x9f,
    0xeb, 0x00, 0x93, 0x23, 0xd9, 0x2e, 0x35, 0xa1, 0x91, 0x7f, 0x08, 0x20,
    0x48, 0x48, 0x89, 0xa7, 0xcf, 0x18, 0x10, 0x46, 0x24, 0x18, 0x03, 0xdb,
    0x19, 0xb7, 0x01, 0x36, 0x9e, 0xe4, 0xff, 0x52, 0xd9, 0xbe, 0x67, 0xfb,
    0xd6, 0x28, 0x88, 0xf2, 0x94, 0xc1, 0x51, 0x0c, 0x7e, 0xab, 0x23, 0x95,
    0xdc, 0x43, 0xff, 0x7e, 0x87, 0x4d, 0x2b, 0xdd, 0xb8, 0xae, 0x56, 0x10,
    0xf9, 0x58, 0xb2, 0x81, 0x54, 0x85, 0xfe, 0x94, 0xb0, 0x54, 0x7b, 0xb1,
    0xb4, 0x4a, 0xf3, 0x9c, 0xd8, 0x7f, 0x02, 0x03, 0x01, 0x00, 0x01, 0x02,
    0x82, 0x01, 0x00, 0x41, 0x50, 0xdd, 0xe7, 0x7f, 0x1d, 0xf0, 0x35, 0x2c,
    0x0f, 0x18, 0xb4, 0xb8, 0x71, 0x60, 0x8e, 0xc2, 0x40, 0xc7, 0xb6, 0xa3,
    0x0d, 0x89, 0x41, 0x3b, 0x75, 0xd4, 0xbe, 0x59, 0x96, 0x19, 0xa2, 0x6e,
    0x20, 0x7b, 0x34, 0xd2, 0xd6, 0xe8, 0x9f, 0xd9, 0xa9, 0xfa, 0xa9, 0x5c,
    0xfe, 0xc6, 0x89, 0x46, 0x84, 0x03, 0xcf, 0xf1, 0x3a, 0xeb, 0xf3, 0x04,
    0xfb, 0xf5, 0x59, 0xeb, 0x5d, 0x35, 0xac, 0x75, 0xa0, 0x6e, 0x4f, 0x94,
    0x05, 0x9c, 0x19, 0xbb, 0xa8, 0x43, 0x34, 0x6c, 0x5d, 0x68, 0x37, 0x66,
    0xf1, 0xc3, 0xdc, 0x7c, 0x5b, 0x6d, 0xd3, 0x65, 0xa0, 0xfc, 0x6c, 0xbc,
    0x7d, 0x28, 0xef, 0xd2, 0x3f, 0x01, 0x93, 0x94, 0x96, 0xa1, 0xd8, 0xb4,
    0x3f, 0x84, 0xa3, 0xed, 0xd3, 0x21, 0x02, 0x8d, 0xdf, 0x0e, 0x41, 0x08,
    0x7f, 0x8e, 0x79, 0x9d, 0xde, 0x58, 0x49, 0xd9, 0x9c, 0x18, 0xc2, 0xee,
    0x49, 0xc7, 0x77, 0x3f, 0xfd, 0xf4, 0x92, 0xa7, 0xa5, 0xfe, 0x36, 0x81,
    0x3a, 0x23, 0xcc, 0xc0, 0x5f, 0xaa, 0x8d, 0xa2, 0x58, 0x17, 0xd1, 0x91,
    0x4e, 0x55, 0xa5, 0xfe, 0x8b, 0x28, 0x7e, 0x2f, 0xaf, 0xea, 0x66, 0x1e,
    0x42, 0x4e, 0x5e, 0xaa, 0x54, 0x97, 0x32, 0x09, 0xfc, 0x2c, 0xb4, 0x6e,
    0x9b, 0xdd, 0x46, 0xfd, 0xe7, 0x92, 0x2d, 0x6c, 0x62, 0xd3, 0x01, 0xdd,
    0x2a, 0x5b, 0x13, 0x09, 0x63, 0x57, 0xae, 0xe2, 0xdb, 0x99, 0x8f, 0x8a,
    0xde, 0x6b, 0xf0, 0x05, 0x71, 0xa6, 0x8f, 0xb6, 0xa7, 0x97, 0x72, 0x90,
    0xcf, 0x9e, 0x2f, 0xd3, 0x44, 0x9b, 0xc4, 0x56, 0x53, 0xc4, 0xcd, 0x2a,
    0x88, 0x8e, 0xf5, 0x5e, 0xff, 0xcb, 0x2b, 0xab, 0x65, 0x23, 0x27, 0x67,
    0xac, 0x68, 0x66, 0x3c, 0xf0, 0xad, 0x74, 0x3d, 0xea, 0x3e, 0x67, 0xb7,
    0x46, 0xdb, 0x67, 0x2b, 0x86, 0x9b, 0x61, 0x02, 0x81, 0x81, 0x00, 0xef,
    0x53, 0x1e, 0x00, 0x84, 0xb1, 0x0b, 0xeb, 0x4b, 0xc5, 0xbe, 0x79, 0x75,
    0xb7, 0xdf, 0xc1, 0x5d, 0xb4, 0x20, 0xf9, 0xce, 0x37, 0x83, 0x33, 0x9f,
    0xa3, 0x85, 0xdc, 0x65, 0xc0, 0xb3, 0xf4, 0xf7, 0xc5, 0x38, 0x04, 0x09,
    0x28, 0x18, 0x5a, 0x17, 0x7b, 0x9c, 0xc6, 0x17, 0x73, 0x31, 0xb8, 0x30,
    0x30, 0x74, 0x1d, 0x13, 0x5f, 0xab, 0x62, 0x15, 0xbd, 0x4b, 0xc8, 0xd4,
    0xcb, 0x06, 0xc4, 0x3a, 0xc1, 0xfc, 0x76, 0x05, 0xfb, 0xb4, 0xaf, 0x0c,
    0x9a, 0x49, 0x1a, 0xfc, 0xc6, 0x2d, 0x0b, 0xd5, 0x44, 0x85, 0x83, 0x2a,
    0x14, 0x82, 0xcc, 0x62, 0xe2, 0x07, 0x80, 0x9b, 0x6e, 0xeb, 0x35, 0x7f,
    0x05, 0x69, 0xb1, 0x5e, 0x88, 0x30, 0x97, 0x53, 0x8b, 0x0e, 0x9c, 0xf4,
    0x70, 0x58, 0x7e, 0xf3, 0x3d, 0x8f, 0xf3, 0x7e, 0x45, 0x1e, 0x5d, 0x1f,
    0xea, 0x37, 0xe7, 0x61, 0xd8, 0xeb, 0x1f, 0x02, 0x81, 0x81, 0x00, 0xde,
    0x87, 0x63, 0xee, 0x85, 0x6e, 0x34, 0x23, 0x86, 0x01, 0x2d, 0xfe, 0x4d,
    0xd0, 0x11, 0xc7, 0xde, 0xba, 0xe4, 0x18, 0xcc, 0x8e, 0x7d, 0x99, 0x37,
    0xcd, 0xdb, 0x1e, 0xdc, 0xc4, 0xda, 0x5c, 0x37, 0x9a, 0xc6, 0x23, 0x4c,
    0x03, 0x10, 0x55, 0x7b, 0x8f, 0x3e, 0x7a, 0x9c, 0xf5, 0xf3, 0x7c, 0x47,
    0x05, 0x6f, 0x26, 0xe4, 0x4a, 0xb8, 0x0b, 0xc7, 0xb4, 0x41, 0x92, 0x97,
    0x55, 0x86, 0xd2, 0xa6, 0xea, 0x70, 0x09, 0xd6, 0x8d, 0xb0, 0x25, 0x9f,
    0x1c, 0xd9, 0x69, 0x94, 0xdb, 0x4a, 0x8c, 0x34, 0x98, 0xa3, 0x77, 0xf5,
    0x6f, 0xc0, 0x67, 0x32, 0x7b, 0x62, 0xac, 0x3e, 0xcc, 0x8f, 0x2c, 0x9e,
    0xc6, 0xb5, 0xf1, 0x96, 0x8d, 0x91, 0x58, 0xd5, 0x1b, 0xf5, 0x7f, 0xdb,
    0x51, 0xa3, 0x19, 0xc4, 0x27, 0xbd, 0x1e, 0xf2, 0x84, 0x41, 0x63, 0xe1,
    0xe3, 0xe1, 0x8f, 0xd7, 0xc9, 0xc6, 0xa1, 0x02, 0x81, 0x80, 0x59, 0x28,
    0x4e, 0xd2, 0x04, 0x9c, 0xec, 0x82, 0xd0, 0xec, 0xaf, 0x24, 0x12, 0x9d,
    0xd8, 0xa6, 0xf1, 0xe0, 0xac, 0x34, 0x44, 0x05, 0xdc, 0x43, 0xfc, 0x21,
    0xf0, 0x39, 0x86, 0x52, 0xbe, 0xf7, 0xf0, 0xe2, 0x31, 0x17, 0x17, 0xce,
    0x2f, 0x1c, 0x49, 0x09, 0x4d, 0x03, 0x63, 0x33, 0x0f, 0xff, 0xbd, 0x3c,
    0x1f, 0xd5, 0xc1, 0x24, 0xef, 0xf5, 0x0f, 0x82, 0x40, 0xdc, 0x65, 0xa1,
    0xe9, 0x38, 0x6b, 0x67, 0x5f, 0x45, 0x1c, 0xbf, 0x83, 0xb5, 0x7e, 0xed,
    0x6f, 0x74, 0xb5, 0x5c, 0xa2, 0xe5, 0x78, 0xa3, 0x19, 0x56, 0x1e, 0xf4,
    0x1b, 0x32, 0x47, 0x58, 0x4b, 0x51, 0x37, 0x16, 0xa0, 0x5b, 0x82, 0xa1,
    0xa2, 0x99, 0x68, 0x4d, 0x36, 0x44, 0xf9, 0xe3, 0xa1, 0x23, 0x09, 0xd1,
    0x5c, 0xb6, 0x96, 0xa9, 0x85, 0x9a, 0x41, 0x9d, 0x40, 0x4d, 0x93, 0x19,
    0x2f, 0x90, 0x6c, 0x9c, 0x62, 0x23, 0x02, 0x81, 0x81, 0x00, 0xca, 0x1a,
    0xe9, 0x35, 0xfe, 0xd5, 0xa2, 0x61, 0x09, 0x1a, 0x15, 0x2d, 0xbc, 0x7a,
    0x57, 0x4b, 0xd2, 0x0c, 0xa7, 0x91, 0xa6, 0x67, 0x5b, 0xc7, 0x46, 0x99,
    0x9e, 0x83, 0x9f, 0x3a, 0xe2, 0x9f, 0x92, 0x98, 0xed, 0x8f, 0xad, 0x3f,
    0xb3, 0x1c, 0x10, 0x46, 0x7f, 0x16, 0x59, 0x6c, 0x40, 0x22, 0x05, 0x56,
    0xf8, 0x26, 0xb8, 0x7c, 0xec, 0x3f, 0x36, 0xb7, 0x8e, 0x3e, 0x97, 0x57,
    0xc4, 0x45, 0x99, 0xf7, 0x9e, 0x9e, 0x30, 0xd1, 0x2a, 0xc4, 0x60, 0x88,
    0x91, 0x25, 0x85, 0x5e, 0xcd, 0x8c, 0x1d, 0x50, 0xec, 0x56, 0xcd, 0x01,
    0x1c, 0x1c, 0x1e, 0x0b, 0x56, 0x08, 0xde, 0x58, 0x67, 0x48, 0xbd, 0x43,
    0xf8, 0x87, 0x5c, 0x97, 0x63, 0x04, 0xed, 0x38, 0xa1, 0x75, 0xe8, 0x39,
    0x73, 0x0a, 0xb9, 0xce, 0xe5, 0xc3, 0x2f, 0xbb, 0xd2, 0xaf, 0xe6, 0xbf,
    0x53, 0x63, 0x93, 0x36, 0xdd, 0x41, 0x02, 0x81, 0x81, 0x00, 0xc4, 0x3d,
    0x78, 0x2b, 0x52, 0xc6, 0x15, 0x46, 0xde, 0x1e, 0x1b, 0xe1, 0xe8, 0xff,
    0x95, 0xd0, 0xd0, 0x67, 0xb3, 0x75, 0xf0, 0x6b, 0xe5, 0x21, 0x2c, 0x90,
    0xa5, 0x9f, 0x9b, 0xba, 0xa0, 0xe2, 0x2d, 0xdd, 0xa5, 0xe3, 0x42, 0x34,
    0x25, 0x60, 0xaa, 0x9f, 0xfa, 0x4a, 0xeb, 0xec, 0xb7, 0xc5, 0xb6, 0xb0,
    0x7a, 0x8e, 0x28, 0xe5, 0xdc, 0x93, 0x43, 0x01, 0x79, 0x40, 0x05, 0x9d,
    0x90, 0xfa, 0x2d, 0xe0, 0x0f, 0x42, 0xea, 0xf2, 0x7d, 0x8a, 0x0b, 0x42,
    0xa1, 0xbb, 0xda, 0x04, 0x58, 0xe8, 0xb1, 0xf8, 0x09, 0xa9, 0x73, 0x2c,
    0x04, 0x36, 0x0b, 0xf6, 0x95, 0x96, 0xe1, 0x34, 0x5b, 0x65, 0x1a, 0x8c,
    0x90, 0x4f, 0x89, 0x0d, 0xed, 0x3f, 0xe7, 0xaa, 0xff, 0x5e, 0x43, 0xd6,
    0x9f, 0x9b, 0xdd, 0xd7, 0xa1, 0x4d, 0x9b, 0xc0, 0x18, 0xc8, 0xdb, 0x32,
    0xe1, 0xcf, 0x14, 0xc8, 0x63, 0xb7};

inline constexpr unsigned char RSA_PUB_DER[] = {
    0x30, 0x82, 0x01, 0x22, 0x30, 0x0d, 0x06, 0x09, 0x2a, 0x86, 0x48, 0x86,
    0xf7, 0x0d, 0x01, 0x01, 0x01, 0x05, 0x00, 0x03, 0x82, 0x01, 0x0f, 0x00,
    0x30, 0x82, 0x01, 0x0a, 0x02, 0x82, 0x01, 0x01, 0x00, 0xd0, 0x08, 0xa6,
    0x45, 0x65, 0xf4, 0xce, 0x8a, 0x69, 0xe4, 0x53, 0xd3, 0xe5, 0xac, 0xdd,
    0xe1, 0x97, 0x46, 0x72, 0xe9, 0xeb, 0x7c, 0x7f, 0x9b, 0xbb, 0x3c, 0xbf,
    0x60, 0x21, 0xe5, 0x5a, 0x72, 0xfe, 0x20, 0x60, 0x69, 0x7a, 0x83, 0x5c,
    0xa1, 0x18, 0x33, 0xdc, 0x16, 0x04, 0x58, 0x01, 0x25, 0x2e, 0x84, 0x05,
    0x00, 0x3b, 0x0e, 0xba, 0x02, 0xa3, 0x01, 0xb3, 0xd1, 0xe6, 0xb2, 0x22,
    0xd8, 0x1c, 0x47, 0x23, 0x96, 0xb3, 0x48, 0x57, 0x87, 0x83, 0xc2, 0xa6,
    0x5c, 0xb8, 0x61, 0x0c, 0xcb, 0x28, 0x41, 0x93, 0x7a, 0x1b, 0xce, 0x2f,
    0xdf, 0x4c, 0x1a, 0x3a, 0x22, 0x96, 0x01, 0x20, 0x01, 0x55, 0x60, 0x76,
    0x46, 0x68, 0x65, 0xf3, 0x36, 0xe6, 0x14, 0xc6, 0x95, 0x17, 0x3f, 0x57,
    0xdd, 0x00, 0x3c, 0xdd, 0x62, 0x0a, 0x8b, 0x91, 0x29, 0x73, 0xe5, 0xad,
    0x0e, 0x46, 0x74, 0x71, 0x88, 0xf2, 0xfe, 0x61, 0x13, 0x91, 0x20, 0x42,
    0x3f, 0xba, 0xb0, 0x0c, 0x6a, 0xd1, 0x5a, 0xee, 0x51, 0x91, 0xbc, 0xa8,
    0xc9, 0x49, 0x49, 0x06, 0x79, 0xb5, 0xb8, 0x25, 0x12, 0xf9, 0xba, 0xa6,
    0x63, 0xa6, 0x7a, 0x40, 0x5a, 0xc9, 0x35, 0x58, 0x03, 0x32, 0x03, 0xea,
    0x1b, 0xff, 0xaa, 0x40, 0xe0, 0x3a, 0x9f, 0xeb, 0x00, 0x93, 0x23, 0xd9,
    0x2e, 0x35, 0xa1, 0x91, 0x7f, 0x08, 0x20, 0x48, 0x48, 0x89, 0xa7, 0xcf,
    0x18, 0x10, 0x46, 0x24, 0x18, 0x03, 0xdb, 0x19, 0xb7, 0x01, 0x36, 0x9e,
    0xe4, 0xff, 0x52, 0xd9, 0xbe, 0x67, 0xfb, 0xd6, 0x28, 0x88, 0xf2, 0x94,
    0xc1, 0x51, 0x0c, 0x7e, 0xab, 0x23, 0x95, 0xdc, 0x43, 0xff, 0x7e, 0x87,
    0x4d, 0x2b, 0xdd, 0xb8, 0xae, 0x56, 0x10, 0xf9, 0x58, 0xb2, 0x81, 0x54,
    0x85, 0xfe, 0x94, 0xb0, 0x54, 0x7b, 0xb1, 0xb4, 0x4a, 0xf3, 0x9c, 0xd8,
    0x7f, 0x02, 0x03, 0x01, 0x00, 0x01};

inline constexpr unsigned char RSA_MSG[] = {
    0x6d, 0x69, 0x63, 0x72, 0x6f, 0x74, 0x65, 0x65, 0x20, 0x72, 0x65, 0x67,
    0x72, 0x65, 0x73, 0x73, 0x69, 0x6f, 0x6e, 0x20, 0x6d, 0x65, 0x73, 0x73,
    0x61, 0x67, 0x65};

inline constexpr unsigned char RSA_SIG[] = {
    0x72, 0xa4, 0x37, 0x07, 0xda, 0xf9, 0x53, 0xaf, 0x4c, 0xa3, 0xe4, 0xc1,
    0xce, 0x51, 0xc0, 0x9f, 0xe0, 0x0f, 0xed, 0xf0, 0x97, 0xe9, 0x53, 0x77,
    0x3e, 0xff, 0x31, 0xce, 0x2d, 0xa3, 0x2b, 0x14, 0xdc, 0x50, 0x40, 0xbd,
    0xc9, 0x2f, 0xa1, 0xc6, 0x46, 0x31, 0xd1, 0x14, 0x3d, 0xdb, 0xa4, 0xd8,
    0xdc, 0xdd, 0xab, 0x1a, 0x76, 0x6a, 0x43, 0x50, 0x65, 0xe6, 0x81, 0xd4,
    0xf7, 0x4b, 0xd6, 0x88, 0x44, 0x85, 0xfa, 0xe0, 0xc8, 0x34, 0xe5, 0x80,
    0x49, 0xb7, 0xfc, 0x20, 0x06, 0x7b, 0xa5, 0x1b, 0xd5, 0x9c, 0x74, 0x85,
    0xc6, 0xe5, 0x58, 0x9b, 0xb3, 0x66, 0x80, 0x73, 0xcc, 0x18, 0x76, 0xca,
    0x69, 0xee, 0xad, 0x7a, 0xbc, 0x0f, 0x92, 0x13, 0x38, 0xf8, 0x5d, 0xe1,
    0x88, 0x9d, 0x7f, 0x6c, 0xaa, 0x40, 0xf2, 0x8a, 0x60, 0x2a, 0x86, 0xd6,
    0xef, 0x31, 0x88, 0x2c, 0x53, 0xa9, 0xcd, 0x57, 0x50, 0xf3, 0xe7, 0x18,
    0x23, 0x77, 0x44, 0xad, 0xf3, 0x3c, 0xdb, 0x44, 0x8e, 0x4a, 0xaf, 0x6d,
    0x93, 0xfd, 0xd6, 0x1a, 0xe2, 0x77, 0xb6, 0x4a, 0xef, 0x96, 0xd7, 0xca,
    0x9f, 0x21, 0x25, 0x11, 0x39, 0xdc, 0x66, 0xf0, 0xaa, 0x19, 0x26, 0xd4,
    0x43, 0x7a, 0x54, 0x12, 0x08, 0xa1, 0xa0, 0x0d, 0x31, 0xee, 0x0e, 0x79,
    0xed, 0xee, 0xa0, 0x76, 0xb9, 0xea, 0xf8, 0xd6, 0x5a, 0xee, 0x0a, 0xfa,
    0x72, 0xc0, 0x79, 0x01, 0xef, 0xda, 0x32, 0x7e, 0x88, 0xed, 0x40, 0xb9,
    0x77, 0xa0, 0x41, 0x02, 0xb7, 0xe5, 0x20, 0x1c, 0xfc, 0xba, 0xc2, 0x60,
    0x47, 0x4e, 0x6c, 0xd3, 0xbc, 0x5b, 0x70, 0x3a, 0x8f, 0xf8, 0x72, 0x8a,
    0x8b, 0x02, 0x1d, 0x4b, 0x14, 0x52, 0x93, 0xb6, 0x1b, 0x6d, 0xa4, 0xbf,
    0x12, 0x8a, 0xe7, 0xa3, 0xe2, 0xea, 0x43, 0xc2, 0xe9, 0xa7, 0x96, 0x4f,
    0x59, 0xb7, 0x64, 0xf1};

}  // namespace vectors
