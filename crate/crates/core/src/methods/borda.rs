use super::arg_best;
use crate::profile::Profile;

/// Symmetric Borda scores: the sum of each alternative's margins.
pub fn borda_scores(p: &Profile) -> Vec<i64> {
    let m = p.margin_matrix();
    let n = m.len();
    (0..n).map(|x| (0..n).map(|y| m.get(x, y)).sum()).collect()
}

pub fn borda(p: &Profile) -> Vec<usize> {
    let scores = borda_scores(p);
    arg_best(scores.len(), |x| scores[x], |a, b| a > b)
}

/// The Condorcet winner if there is one, otherwise the Borda winners.
pub fn black(p: &Profile) -> Vec<usize> {
    match p.margin_matrix().condorcet_winner() {
        Some(w) => vec![w],
        None => borda(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_borda_agrees_on_linear_profiles() {
        let p = Profile::parse("3: a>b>c>d\n2: d>c>b>a\n2: b>d>a>c\n").unwrap();
        let n = 4;
        let mut textbook = vec![0i64; n];
        for (b, c) in p.entries() {
            for (pos, tier) in b.tiers().iter().enumerate() {
                textbook[tier[0]] += (n - 1 - pos) as i64 * *c as i64;
            }
        }
        let best = *textbook.iter().max().unwrap();
        let expected: Vec<usize> = (0..n).filter(|&x| textbook[x] == best).collect();
        assert_eq!(borda(&p), expected);
    }
}
