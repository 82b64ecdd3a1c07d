use std::collections::HashMap;
use std::fmt;

use parking_lot::RwLock;

use super::ExactInt;

/// Computes row `row` of a triangle given read access to every earlier row.
pub type RowFn = dyn Fn(usize, &dyn Fn(usize, usize) -> ExactInt) -> Vec<ExactInt> + Send + Sync;

/// A lazily filled two-index triangle.
///
/// Rows are produced in order by the row function, on demand, the first time
/// any cell at or beyond them is read. A cell that is already present is never
/// overwritten, which makes concurrent fills of the same row harmless: both
/// writers compute the same values and only the first one lands. Cells past
/// the end of a filled row read as zero.
pub struct MemoTable {
    name: &'static str,
    row_fn: Box<RowFn>,
    state: RwLock<State>,
}

#[derive(Default)]
struct State {
    cells: HashMap<(usize, usize), ExactInt>,
    rows_filled: usize,
}

impl MemoTable {
    pub fn new<F>(name: &'static str, row_fn: F) -> Self
    where
        F: Fn(usize, &dyn Fn(usize, usize) -> ExactInt) -> Vec<ExactInt> + Send + Sync + 'static,
    {
        MemoTable {
            name,
            row_fn: Box::new(row_fn),
            state: RwLock::new(State::default()),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn get(&self, row: usize, col: usize) -> ExactInt {
        {
            let state = self.state.read();
            if row < state.rows_filled {
                return state.cells.get(&(row, col)).cloned().unwrap_or_default();
            }
        }
        let mut state = self.state.write();
        while state.rows_filled <= row {
            let r = state.rows_filled;
            let values = {
                let cells = &state.cells;
                let lookup = |i: usize, j: usize| cells.get(&(i, j)).cloned().unwrap_or_default();
                (self.row_fn)(r, &lookup)
            };
            for (c, v) in values.into_iter().enumerate() {
                state.cells.entry((r, c)).or_insert(v);
            }
            state.rows_filled += 1;
        }
        state.cells.get(&(row, col)).cloned().unwrap_or_default()
    }

    /// Inserts `value` only if the cell is absent. Returns whether it landed.
    ///
    /// A seeded cell survives the later fill of its row, so seeding before the
    /// first read is how a corrupted table is built for fault-injection runs.
    pub fn seed(&self, row: usize, col: usize, value: ExactInt) -> bool {
        let mut state = self.state.write();
        match state.cells.entry((row, col)) {
            std::collections::hash_map::Entry::Occupied(_) => false,
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(value);
                true
            }
        }
    }

    pub fn is_cached(&self, row: usize, col: usize) -> bool {
        self.state.read().cells.contains_key(&(row, col))
    }

    pub fn rows_filled(&self) -> usize {
        self.state.read().rows_filled
    }
}

impl fmt::Debug for MemoTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MemoTable")
            .field("name", &self.name)
            .field("rows_filled", &self.rows_filled())
            .finish()
    }
}
