// Copyright 2026 The xssunit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Runs every fixture in a real JS engine and compares against the frozen
// expectation. Usage: node verify_js_fixtures.js fixtures.json [--freeze]

'use strict';
const fs = require('fs');

const path = process.argv[2];
const freeze = process.argv.includes('--freeze');
const fixtures = JSON.parse(fs.readFileSync(path, 'utf8'));

function runs(code) {
  let fired = false;
  const attack = () => { fired = true; };
  const noop = () => {};
  const parent = { location: { href: '' } };
  try {
    new Function('attack', 'Fn', 'fn', 'action', 'parent', code)(attack, noop, noop, noop, parent);
  } catch (e) {
    // syntax errors before the call count as not executed
  }
  return fired;
}

let failed = 0;
for (const f of fixtures) {
  const actual = runs(f.code);
  if (freeze) {
    f.expected = actual;
  } else if (actual !== f.expected) {
    failed++;
    console.log(`FAIL ${f.name}: engine=${actual} frozen=${f.expected}`);
  }
}
if (freeze) {
  fs.writeFileSync(path, JSON.stringify(fixtures, null, 2) + '\n');
  console.log(`froze ${fixtures.length} fixtures`);
} else {
  console.log(`${fixtures.length - failed}/${fixtures.length} fixtures agree with the engine`);
}
process.exit(failed ? 1 : 0);
