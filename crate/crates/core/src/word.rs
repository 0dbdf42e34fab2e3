//! Text form of words over the non-negative integers.
//!
//! Words whose entries are all single digits print as a bare digit string
//! (`0023136638899`); anything else prints comma-separated (`0,1,10,3`).
//! Parsing accepts both forms.

use crate::error::{Error, Result};

pub fn parse_word(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let err = |reason: &str| Error::Parse {
        word: text.to_string(),
        reason: reason.to_string(),
    };
    if text.contains(',') {
        text.split(',')
            .map(|part| {
                let part = part.trim();
                if part.is_empty() {
                    return Err(err("empty entry"));
                }
                part.parse::<u32>().map_err(|_| err("non-digit content"))
            })
            .collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| err("non-digit content")))
            .collect()
    }
}

pub fn format_word(word: &[u32]) -> String {
    if word.iter().all(|&v| v <= 9) {
        word.iter()
            .map(|v| char::from_digit(*v, 10).unwrap())
            .collect()
    } else {
        word.iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_string_and_csv_agree() {
        assert_eq!(
            parse_word("0023136638899").unwrap(),
            parse_word("0,0,2,3,1,3,6,6,3,8,8,9,9").unwrap()
        );
    }

    #[test]
    fn large_values_use_commas() {
        let w = vec![0, 1, 10, 3];
        assert_eq!(format_word(&w), "0,1,10,3");
        assert_eq!(parse_word(&format_word(&w)).unwrap(), w);
        assert_eq!(format_word(&[0, 0, 2]), "002");
        assert_eq!(format_word(&[]), "");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_word("01a").is_err());
        assert!(parse_word("0,,1").is_err());
        assert!(parse_word("0,-1").is_err());
        assert_eq!(parse_word("  ").unwrap(), Vec::<u32>::new());
    }
}
