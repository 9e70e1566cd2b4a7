//! Sparse row elimination shared by the modular and fraction-free backends.
//!
//! Rows are sorted `(col, value)` lists. Each step picks the live column
//! with the fewest nonzeros and, inside it, the cheapest pivot (units first,
//! then shortest row), which keeps fill low on incidence-style matrices.
//! Rows that do not meet the pivot column are never touched.

pub(crate) type Row<E> = Vec<(u32, E)>;

/// Arithmetic required by [`eliminate`].
pub(crate) trait Domain {
    type Elem: Clone;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Smaller is preferred when choosing among pivots of equal row length.
    fn pivot_cost(&self, a: &Self::Elem) -> u64;

    /// Called once on a row before it is used as pivot on `col`.
    fn prepare_pivot(&self, row: &mut Row<Self::Elem>, col: u32) -> Result<(), Overflow>;

    /// Writes into `out` the row `target` with its `col` entry cleared by
    /// `pivot`; zero entries must not appear in `out`.
    fn eliminate(
        &self,
        target: &Row<Self::Elem>,
        pivot: &Row<Self::Elem>,
        col: u32,
        out: &mut Row<Self::Elem>,
    ) -> Result<(), Overflow>;
}

/// Raised by fixed-width integer arithmetic; callers retry with big integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Overflow;

/// Pivot rows in elimination order. Row `i` is zero on the pivot columns of
/// all earlier rows and nonzero on its own.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<E> {
    pub n_cols: usize,
    pub pivots: Vec<(u32, Row<E>)>,
}

impl<E> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<u32> {
        let mut is_pivot = vec![false; self.n_cols];
        for (c, _) in &self.pivots {
            is_pivot[*c as usize] = true;
        }
        (0..self.n_cols as u32).filter(|&c| !is_pivot[c as usize]).collect()
    }
}

pub(crate) fn entry<E>(row: &Row<E>, col: u32) -> Option<&E> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|i| &row[i].1)
}

pub(crate) fn eliminate<D: Domain>(
    domain: &D,
    n_cols: usize,
    input: Vec<Row<D::Elem>>,
) -> Result<Echelon<D::Elem>, Overflow> {
    let mut rows: Vec<Option<Row<D::Elem>>> = input
        .into_iter()
        .map(|r| {
            let r: Row<D::Elem> = r.into_iter().filter(|(_, v)| !domain.is_zero(v)).collect();
            (!r.is_empty()).then_some(r)
        })
        .collect();
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); n_cols];
    let mut col_count: Vec<u32> = vec![0; n_cols];
    for (i, r) in rows.iter().enumerate() {
        for (c, _) in r.iter().flatten() {
            col_rows[*c as usize].push(i as u32);
            col_count[*c as usize] += 1;
        }
    }
    let mut col_live: Vec<u32> = (0..n_cols as u32).filter(|&c| col_count[c as usize] > 0).collect();
    let mut in_live: Vec<bool> = col_count.iter().map(|&n| n > 0).collect();

    let mut pivots = Vec::new();
    let mut scratch: Row<D::Elem> = Vec::new();
    let mut candidates: Vec<u32> = Vec::new();

    loop {
        col_live.retain(|&c| {
            let keep = col_count[c as usize] > 0;
            in_live[c as usize] = keep;
            keep
        });
        let Some(&col) = col_live.iter().min_by_key(|&&c| col_count[c as usize]) else {
            break;
        };

        candidates.clear();
        candidates.extend(col_rows[col as usize].iter().copied().filter(|&r| {
            rows[r as usize]
                .as_ref()
                .is_some_and(|row| entry(row, col).is_some())
        }));
        candidates.sort_unstable();
        candidates.dedup();
        debug_assert_eq!(candidates.len(), col_count[col as usize] as usize);

        let &pivot_idx = candidates
            .iter()
            .min_by_key(|&&r| {
                let row = rows[r as usize].as_ref().unwrap();
                (row.len(), domain.pivot_cost(entry(row, col).unwrap()))
            })
            .unwrap();
        let mut pivot = rows[pivot_idx as usize].take().unwrap();
        for (c, _) in &pivot {
            col_count[*c as usize] -= 1;
        }
        domain.prepare_pivot(&mut pivot, col)?;

        for &r in &candidates {
            if r == pivot_idx {
                continue;
            }
            let old = rows[r as usize].take().unwrap();
            scratch.clear();
            domain.eliminate(&old, &pivot, col, &mut scratch)?;
            // column bookkeeping from the symmetric difference of supports
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < scratch.len() {
                let a = old.get(i).map(|e| e.0);
                let b = scratch.get(j).map(|e| e.0);
                match (a, b) {
                    (Some(x), Some(y)) if x == y => {
                        i += 1;
                        j += 1;
                    }
                    (Some(x), Some(y)) if x < y => {
                        col_count[x as usize] -= 1;
                        i += 1;
                    }
                    (Some(x), None) => {
                        col_count[x as usize] -= 1;
                        i += 1;
                    }
                    (_, Some(y)) => {
                        col_count[y as usize] += 1;
                        col_rows[y as usize].push(r);
                        if !in_live[y as usize] {
                            in_live[y as usize] = true;
                            col_live.push(y);
                        }
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            if !scratch.is_empty() {
                rows[r as usize] = Some(std::mem::take(&mut scratch));
            }
        }
        debug_assert_eq!(col_count[col as usize], 0);
        col_rows[col as usize] = Vec::new();
        pivots.push((col, pivot));
    }

    Ok(Echelon { n_cols, pivots })
}
