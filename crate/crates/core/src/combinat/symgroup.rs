use std::cell::RefCell;
use std::collections::HashMap;

use super::{CombinatError, Partition};

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

thread_local! {
    static MN_MEMO: RefCell<MnMemo> = RefCell::new(HashMap::new());
}

/// Irreducible character χ^λ of the symmetric group at cycle type ρ, by the
/// Murnaghan–Nakayama rule.
pub fn sym_char(lambda: &Partition, rho: &Partition) -> Result<i64, CombinatError> {
    if lambda.size() != rho.size() {
        return Err(CombinatError::SizeMismatch(lambda.size(), rho.size()));
    }
    Ok(mn(lambda.parts(), rho.parts()))
}

fn mn(lambda: &[usize], rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(v) = MN_MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let r = rho[0];
    let l = lambda.len();
    // beta numbers: removing an r-rim hook moves one bead r places down
    let beta: Vec<usize> = (0..l).map(|i| lambda[i] + (l - 1 - i)).collect();
    let mut total = 0;
    for i in 0..l {
        let b = beta[i];
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let nb = b - r;
        let crossed = beta.iter().filter(|&&x| nb < x && x < b).count();
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> =
            (0..l).map(|k| nbeta[k] - (l - 1 - k)).filter(|&p| p > 0).collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&parts, &rho[1..]);
    }
    MN_MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}
